import networkx as nx
import pytest

from conftest import family_grid, vertex_transitive_grid
from errors import (
    Disconnected,
    NotAPartition,
    NotCubic,
    NotPlusMinusOne,
    NotSimple,
    StructureViolation,
    TooLarge,
)
from exact_linalg import adjacency_matrix, eigen_multiplicity, mat_vec
from families import (
    complete_bipartite,
    complete_graph,
    cycle,
    f2n,
    gen_petersen,
    prism,
    t_m,
    triple_edge,
    truncate_cubic,
)
from multigraph import bipartition, from_edge_list, is_regular, to_networkx
from structure import (
    QuotientMatrix,
    both_simple_certificate,
    check_equitable,
    contracted_multigraph,
    eigenvector_from_partition,
    pm1_eigenvector,
    quotient_in_spectrum,
    sign_degrees,
    sign_partition,
    truncation_preimage,
    unique_two_regular_partition,
    w_quotient_matrix,
)


def simple_one_instances(max_order=26):
    return [(label, g) for label, g in vertex_transitive_grid(max_order) if eigen_multiplicity(g, 1) == 1]


def test_pm1_eigenvector_prism3():
    assert pm1_eigenvector(prism(3), 1) == [1, 1, 1, -1, -1, -1]


def test_pm1_eigenvector_errors(petersen):
    with pytest.raises(NotSimple) as errorinfo:
        pm1_eigenvector(petersen, 1)
    assert "multiplicity 5" in str(errorinfo.value)
    # 0 is not an eigenvalue of the 5-cycle
    with pytest.raises(NotSimple):
        pm1_eigenvector(cycle(5), 0)


def test_pm1_eigenvector_not_plus_minus_one():
    # the path 0-1-2 has simple eigenvalue 0 with eigenvector (1, 0, -1)
    path = from_edge_list(3, [(0, 1), (1, 2)])
    with pytest.raises(NotPlusMinusOne):
        pm1_eigenvector(path, 0)


def test_sign_partition_prism3():
    p = sign_partition(prism(3))
    assert p.vplus == {0, 1, 2}
    assert p.vminus == {3, 4, 5}
    assert p.matching == ((0, 3), (1, 4), (2, 5))
    assert p.cycle_type == (1, 3)
    assert p.to_dict()["cycle_type"] == {"m": 1, "k": 3}
    assert truncation_preimage(prism(3)) == triple_edge()


def test_sign_partition_f4(f4):
    p = sign_partition(f4)
    assert p.plus_cycles == ((0, 1),)
    assert p.minus_cycles == ((2, 3),)
    assert p.matching == ((0, 3), (1, 2))
    assert p.cycle_type == (1, 2)
    frame = p.sign_table(f4.n)
    assert list(frame.columns) == ["vertex", "sign"]
    assert frame["sign"].tolist() == [1, 1, -1, -1]


def test_sign_partition_f8_is_two_digons_per_side():
    p = sign_partition(f2n(4))
    assert p.cycle_type == (2, 2)
    contracted = contracted_multigraph(f2n(4), p)
    assert contracted.n == 4
    assert is_regular(contracted, 2)
    assert bipartition(contracted) is not None


def test_sign_partition_prism5_contracts_to_five_parallel_edges():
    p = sign_partition(prism(5))
    assert p.cycle_type == (1, 5)
    assert contracted_multigraph(prism(5), p) == from_edge_list(2, [(0, 1)] * 5)


def test_t3_contracts_to_k33():
    g = t_m(3)
    contracted = contracted_multigraph(g, sign_partition(g))
    assert contracted.n == 6
    assert len(set(contracted.edges)) == contracted.m == 9
    assert nx.is_isomorphic(nx.Graph(to_networkx(contracted)), nx.complete_bipartite_graph(3, 3))


def test_sign_partition_preconditions(petersen):
    with pytest.raises(NotCubic):
        sign_partition(cycle(4))
    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    two_k4 = from_edge_list(8, k4 + [(u + 4, v + 4) for u, v in k4])
    with pytest.raises(Disconnected):
        sign_partition(two_k4)
    with pytest.raises(NotSimple):
        sign_partition(petersen)


def test_non_transitive_gp_fails_equal_cycle_length():
    # P(6,2): 1 is simple, but the inner side splits into two triangles
    g = gen_petersen(6, 2)
    assert eigen_multiplicity(g, 1) == 1
    with pytest.raises(StructureViolation) as errorinfo:
        sign_partition(g)
    assert errorinfo.value.clause == "equal-cycle-length"


def test_structure_across_vertex_transitive_grid():
    instances = simple_one_instances()
    assert len(instances) > 20
    for label, g in instances:
        p = sign_partition(g)
        assert len(p.matching) == g.n // 2, label
        covered = sorted(v for e in p.matching for v in e)
        assert covered == list(range(g.n)), label
        lengths = {len(c) for c in p.plus_cycles + p.minus_cycles}
        assert len(lengths) == 1, label
        assert len(p.plus_cycles) == len(p.minus_cycles), label

        contracted = contracted_multigraph(g, p)
        assert is_regular(contracted, p.cycle_type[1]), label

        # flipping all signs gives the same unordered partition
        flipped = eigenvector_from_partition(g, p.vminus)
        assert flipped == (1, [-x for x in p.signs(g.n)]), label
        z = p.signs(g.n)
        assert mat_vec(adjacency_matrix(g), z) == z, label


def test_two_regular_partition_count_follows_multiplicity_of_one():
    grid = family_grid(f2n_max=12, prism_max=12, gp_max=12, tm_max=3)
    checked = 0
    for label, g in grid:
        mult = eigen_multiplicity(g, 1)
        if mult > 1:
            continue
        count = unique_two_regular_partition(g)
        if mult == 0:
            assert count == 0, label
            continue
        try:
            pm1_eigenvector(g, 1)
        except NotPlusMinusOne:
            assert count == 0, label
        else:
            assert count == 1, label
        checked += 1
    assert checked > 20


def test_unique_two_regular_partition_counts(petersen, cube, f4):
    assert unique_two_regular_partition(f4) == 1
    assert unique_two_regular_partition(petersen) == 6
    assert unique_two_regular_partition(cube) == 3
    assert unique_two_regular_partition(f2n(3)) == 0
    with pytest.raises(TooLarge):
        unique_two_regular_partition(t_m(4))
    with pytest.raises(NotCubic):
        unique_two_regular_partition(cycle(6))


def test_both_simple_implies_bipartite_across_grids():
    graphs = [g for _, g in family_grid(f2n_max=40, prism_max=40, gp_max=30, tm_max=10)]
    graphs += [truncate_cubic(g) for g in (complete_graph(4), complete_bipartite(3, 3), prism(4), prism(6))]
    checked = 0
    for g in graphs:
        if eigen_multiplicity(g, 1) != 1:
            continue
        if eigen_multiplicity(g, -1) == 1:
            assert bipartition(g) is not None
            checked += 1
    assert checked > 0


def test_certificate_f4(f4):
    certificate = both_simple_certificate(f4)
    assert certificate.applicable
    assert certificate.w_sets == {"++": [0], "+-": [1], "-+": [3], "--": [2]}
    assert certificate.w_bipartition_verified
    assert certificate.w_sets_independent
    record = certificate.to_dict()
    assert record["verdict"] == "bipartite"
    assert record["mult_1"] == 1 and record["mult_-1"] == 1


def test_certificate_prism6():
    certificate = both_simple_certificate(prism(6))
    assert certificate.applicable
    assert certificate.bipartite
    assert certificate.to_dict()["verdict"] == "bipartite"


def test_certificate_not_applicable(petersen):
    record = both_simple_certificate(petersen).to_dict()
    assert record == {
        "mult_1": 5,
        "mult_-1": 0,
        "bipartite": False,
        "applicable": False,
        "verdict": "not applicable",
    }


def test_certificate_not_applicable_for_truncated_k33():
    record = both_simple_certificate(truncate_cubic(complete_bipartite(3, 3))).to_dict()
    assert record == {
        "mult_1": 1,
        "mult_-1": 0,
        "bipartite": False,
        "applicable": False,
        "verdict": "not applicable",
    }
    # spectrum of prism(3) is 3, 1, 0, 0, -2, -2
    certificate = both_simple_certificate(prism(3))
    assert not certificate.applicable
    assert certificate.to_dict()["mult_-1"] == 0


def test_w_partition_of_cube(w_cube):
    q = check_equitable(w_cube, [{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    assert q is not None
    assert q.b == w_quotient_matrix()
    assert q.to_dict()["parts"] == [[0, 1], [2, 3], [4, 5], [6, 7]]
    assert quotient_in_spectrum(w_cube, q)


def test_check_equitable_non_uniform(petersen):
    assert check_equitable(petersen, [{0}, set(range(1, 10))]) is None


def test_check_equitable_outer_inner(petersen):
    q = check_equitable(petersen, [set(range(5)), set(range(5, 10))])
    assert q.b.to_rows() == [[2, 1], [1, 2]]
    assert quotient_in_spectrum(petersen, q)


def test_quotient_not_in_spectrum(petersen):
    # eigenvalue 2 of this matrix is not in the Petersen spectrum
    fake = QuotientMatrix(parts=(frozenset(range(5)), frozenset(range(5, 10))),
                          b=check_equitable(complete_graph(3), [{0}, {1, 2}]).b)
    assert not quotient_in_spectrum(petersen, fake)


@pytest.mark.parametrize("parts", [
    [{0, 1}, {1, 2, 3}],
    [{0, 1}, set()],
    [{0, 1}, {2}],
    [{0, 1, 2, 3, 4}],
])
def test_check_equitable_rejects_non_partitions(parts):
    g = complete_graph(4)
    with pytest.raises(NotAPartition):
        check_equitable(g, parts)


def test_sign_degrees():
    assert sign_degrees(prism(3), [1, 1, 1, -1, -1, -1]) == (1, 2, 1)
    assert sign_degrees(f2n(2), [1, -1, -1, 1]) == (-1, 1, 2)
    with pytest.raises(NotPlusMinusOne):
        sign_degrees(prism(3), [1, 0, 1, -1, -1, -1])
    with pytest.raises(StructureViolation) as errorinfo:
        sign_degrees(prism(3), [1, -1, 1, -1, 1, -1])
    assert errorinfo.value.clause == "eigenvector"


def test_eigenvector_from_partition(petersen):
    assert eigenvector_from_partition(petersen, range(5)) == (1, [1] * 5 + [-1] * 5)
    with pytest.raises(StructureViolation) as errorinfo:
        eigenvector_from_partition(petersen, [0])
    assert errorinfo.value.clause == "semi-regular"
    with pytest.raises(NotAPartition):
        eigenvector_from_partition(petersen, range(10))


def test_truncation_preimage_of_truncated_k33():
    preimage = truncation_preimage(truncate_cubic(complete_bipartite(3, 3)))
    assert is_regular(preimage, 3)
    assert nx.is_isomorphic(nx.Graph(to_networkx(preimage)), nx.complete_bipartite_graph(3, 3))


def test_truncation_preimage_needs_triangles():
    with pytest.raises(StructureViolation) as errorinfo:
        truncation_preimage(prism(5))
    assert errorinfo.value.clause == "type-C(m,3)"
