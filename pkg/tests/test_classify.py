import pytest

from classify import (
    PREDICTOR_NAMES,
    TRUNCATION_GRAPHS,
    get_predictor,
    parse_range,
    predict_f2n,
    predict_gp,
    predict_prism,
    predict_tm,
    predict_truncation,
    verify_family,
)
from classify.predictors.base import FamilyPredictor
from classify.predictors.truncation import truncation_base
from errors import Disconnected, NotCubic, OutOfRange, ParseError, UnknownFamily
from exact_linalg import eigen_multiplicity
from families import complete_graph, cycle, gen_petersen, triple_edge, truncate_cubic, valid_gp_steps
from multigraph import bipartition, from_edge_list, is_connected, is_regular


def assert_all_agree(report):
    assert report.summary["disagree"] == 0, [row.label for row in report.disagreements]
    assert report.summary["error"] == 0
    assert report.summary["agree"] == report.summary["total"]


def test_f2n_sweep():
    report = verify_family("f2n", "2..40")
    assert report.summary["total"] == 39
    assert_all_agree(report)


def test_prism_sweep():
    assert_all_agree(verify_family("prism", "3..40"))


def test_gp_sweep():
    report = verify_family("gp", "3..30")
    assert report.summary["total"] == sum(len(valid_gp_steps(n)) for n in range(3, 31))
    assert_all_agree(report)
    mult1 = {}
    for row in report.rows:
        assert row.extra["gp_one_multiplicity"] == row.multiplicity, row.label
        mult1[row.params] = row.multiplicity
    for (n, k), multiplicity in mult1.items():
        assert mult1[(n, n - k)] == multiplicity, (n, k)


def test_tm_sweep():
    report = verify_family("tm", "3..10")
    assert [row.multiplicity == 1 for row in report.rows] == [predict_tm(m) for m in range(3, 11)]
    assert_all_agree(report)


def test_truncation_sweep():
    report = verify_family("truncation", "0..19")
    assert report.summary["total"] == 20
    assert_all_agree(report)
    predictions = {row.predicted for row in report.rows}
    assert predictions == {True, False}


def test_truncation_grid_is_connected_cubic():
    assert len(TRUNCATION_GRAPHS) == 20
    for name, builder in TRUNCATION_GRAPHS:
        g = builder()
        assert is_regular(g, 3), name
        assert is_connected(g), name


def test_truncation_multiplicity_follows_bipartiteness():
    for name, builder in TRUNCATION_GRAPHS:
        g = builder()
        expected = 1 if bipartition(g) is not None else 0
        assert eigen_multiplicity(truncate_cubic(g), 1) == expected, name


def test_predict_truncation_preconditions():
    assert predict_truncation(triple_edge())
    assert not predict_truncation(complete_graph(4))
    with pytest.raises(NotCubic):
        predict_truncation(cycle(4))
    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    with pytest.raises(Disconnected):
        predict_truncation(from_edge_list(8, k4 + [(u + 4, v + 4) for u, v in k4]))


def test_twenty_divides_n():
    # both divisor clauses apply at n = 20
    report = verify_family("gp", "20")
    assert_all_agree(report)
    simple = sorted(row.params[1] for row in report.rows if row.multiplicity == 1)
    assert simple == [4, 6, 14, 16]
    assert eigen_multiplicity(gen_petersen(20, 3), 1) > 1
    assert eigen_multiplicity(gen_petersen(20, 2), 1) > 1


def test_mod_five_reading():
    assert not predict_gp(15, 7)
    assert eigen_multiplicity(gen_petersen(15, 7), 1) == 5
    assert predict_gp(15, 4)
    assert eigen_multiplicity(gen_petersen(15, 4), 1) == 1


def test_gp_prediction_is_symmetric_in_k():
    for n in range(3, 31):
        for k in valid_gp_steps(n):
            assert predict_gp(n, k) == predict_gp(n, n - k)


def test_simple_predicates():
    assert predict_f2n(4) and not predict_f2n(5)
    assert predict_prism(6) and not predict_prism(8)
    assert predict_tm(3) and not predict_tm(4) and not predict_tm(5) and predict_tm(7)


def test_gp_rows_carry_extra_columns():
    report = verify_family("gp", "10:3")
    (row,) = report.rows
    assert row.label == "P(10,3)"
    assert row.extra == {"gp_one_multiplicity": 5, "gp_is_vertex_transitive": True}
    assert row.multiplicity == 5
    assert row.status == "agree"


def test_report_frame_and_dict():
    report = verify_family("prism", "3..5")
    frame = report.to_frame()
    assert list(frame.columns) == ["family", "instance", "params", "predicted_simple", "mult1", "status"]
    assert frame["instance"].tolist() == ["prism(3)", "prism(4)", "prism(5)"]
    assert frame["mult1"].tolist() == [1, 3, 1]
    record = report.to_dict()
    assert record["summary"] == {"total": 3, "agree": 3, "disagree": 0, "error": 0}
    assert record["rows"][1]["predicted_simple"] is False


def test_errors_are_recorded_per_row():
    report = verify_family("gp", [(8, 4), (5, 2)])
    bad, good = report.rows
    assert bad.status == "error"
    assert "DegenerateStep" in bad.error
    assert good.status == "agree"
    assert report.summary == {"total": 2, "agree": 1, "disagree": 0, "error": 1}


def test_out_of_range_truncation_index_is_an_error_row():
    report = verify_family("truncation", [(25,)])
    assert report.rows[0].status == "error"
    with pytest.raises(OutOfRange):
        truncation_base(25)


class AlwaysSimple(FamilyPredictor):
    name = "always"

    def build(self, params):
        return gen_petersen(5, 2)

    def predict(self, params):
        return True


def test_disagreement_is_flagged(monkeypatch):
    monkeypatch.setattr("classify.core.get_predictor", lambda name: AlwaysSimple())
    report = verify_family("always", "1")
    assert report.rows[0].status == "DISAGREE"
    assert report.disagreements == report.rows
    assert report.to_frame()["status"].tolist() == ["DISAGREE"]


def test_factory():
    assert PREDICTOR_NAMES == ("f2n", "prism", "gp", "tm", "truncation")
    assert get_predictor(" GP ").name == "gp"
    with pytest.raises(UnknownFamily):
        get_predictor("heawood")


@pytest.mark.parametrize("text, expected", [("3..7", (3, 7)), ("12", (12, 12)), (" 4..4 ", (4, 4))])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["7..3", "a..b", "", "3..", "10:3"])
def test_parse_range_errors(text):
    with pytest.raises(ParseError):
        parse_range(text)


def test_gp_grid_syntax():
    predictor = get_predictor("gp")
    assert predictor.parse_grid("8") == [(8, k) for k in (1, 2, 3, 5, 6, 7)]
    assert predictor.parse_grid("10:3") == [(10, 3)]
    with pytest.raises(ParseError):
        predictor.parse_grid("10:x")
