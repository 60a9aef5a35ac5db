# cubic_analysis.py

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from classify import PREDICTOR_NAMES, verify_family
from cosine import predicted_solutions, roots1_solutions
from errors import ParseError
from exact_linalg import eigen_multiplicity
from families import family_graph, family_names, truncate_cubic
from gen_excel import generate_report_workbook
from maps import (
    census,
    euler_genus,
    face_degrees,
    facial_walks,
    format_map,
    kmm_map,
    mobius_kantor_map,
    parse_map,
    vertex_degrees,
    vertex_truncation,
)
from multigraph import parse_edge_list, to_edge_list_text
from spectra import spectrum_report
from structure import both_simple_certificate, contracted_multigraph, sign_partition
from utils import DEFAULT_CONFIG_PATH, dump_json, load_config, read_text_source, resolve_tolerances, save_to_file, setup_logging

logger = logging.getLogger(__name__)


def _csv(frame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _read_graph(path: str):
    return parse_edge_list(read_text_source(path))


def _read_map(path: str):
    return parse_map(read_text_source(path))


def emit(args, text: str, filename: str):
    """Write to -o PATH when given, stdout otherwise; --save also copies into the output directory."""
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)
    if args.save:
        save_to_file(text, filename)


# ---------------------------
# Subcommands
# ---------------------------

def cmd_gen(args, settings):
    g = family_graph(args.family, args.params)
    suffix = "_".join(str(p) for p in args.params)
    emit(args, to_edge_list_text(g), f"{args.family}_{suffix}.txt" if suffix else f"{args.family}.txt")


def cmd_spectrum(args, settings):
    report = spectrum_report(_read_graph(args.graph), tol=settings["tol"], int_tol=settings["int_tol"])
    emit(args, dump_json(report.to_dict()), "spectrum.json")


def cmd_mult(args, settings):
    emit(args, f"{eigen_multiplicity(_read_graph(args.graph), args.lam)}\n", "mult.txt")


def cmd_partition(args, settings):
    g = _read_graph(args.graph)
    p = sign_partition(g)
    if args.signs:
        emit(args, _csv(p.sign_table(g.n)), "partition_signs.csv")
        return
    contracted = contracted_multigraph(g, p)
    record = p.to_dict()
    record["contracted"] = {"n": contracted.n, "edges": [list(e) for e in contracted.edges]}
    emit(args, dump_json(record), "partition.json")


def cmd_certify(args, settings):
    certificate = both_simple_certificate(_read_graph(args.graph))
    emit(args, dump_json(certificate.to_dict()), "certificate.json")


def cmd_truncate(args, settings):
    emit(args, to_edge_list_text(truncate_cubic(_read_graph(args.graph))), "truncation.txt")


def cmd_map_faces(args, settings):
    m = _read_map(args.map)
    record = {
        "V": m.n_vertices,
        "E": m.n_edges,
        "F": len(facial_walks(m)),
        "genus": euler_genus(m),
        "vertex_degrees": vertex_degrees(m),
        "face_degrees": face_degrees(m),
        "faces": facial_walks(m),
    }
    emit(args, dump_json(record), "map_faces.json")


def cmd_map_truncate(args, settings):
    emit(args, to_edge_list_text(vertex_truncation(_read_map(args.map))), "map_truncation.txt")


def cmd_cosine(args, settings):
    enumerated = roots1_solutions(args.m, tol=settings["tol"])
    predicted = predicted_solutions(args.m)
    record = {
        "m": args.m,
        "enumerated": [list(p) for p in enumerated.sorted_pairs()],
        "predicted": [list(p) for p in predicted.sorted_pairs()],
        "match": enumerated.solutions == predicted.solutions,
    }
    if not record["match"]:
        logger.warning(f"m={args.m}: enumeration and closed form differ")
    emit(args, dump_json(record), f"cosine_{args.m}.json")


def cmd_verify(args, settings):
    grid = args.range or settings["config"].get("verify_grids", {}).get(args.family)
    if not grid:
        raise ParseError(f"no range given and no default grid configured for '{args.family}'")
    report = verify_family(args.family, grid)
    emit(args, _csv(report.to_frame()), f"verify_{args.family}.csv")
    if args.xlsx:
        generate_report_workbook(args.xlsx, verification_reports=[report])
    summary = report.summary
    logger.info(f"{summary['agree']}/{summary['total']} agree, {summary['disagree']} DISAGREE, "
                f"{summary['error']} errored")


def cmd_census(args, settings):
    directory = args.directory
    if directory is None and settings["config"].get("bundled_map_dir"):
        directory = settings["config_dir"] / settings["config"]["bundled_map_dir"]
    frame = census(directory, include_duals=args.duals)
    emit(args, _csv(frame), "census.csv")
    if args.xlsx:
        generate_report_workbook(args.xlsx, census_frame=frame)


def cmd_export_map(args, settings):
    if args.kind == "kmm":
        if args.m is None:
            raise ParseError("export-map kmm needs m")
        m = kmm_map(args.m)
        comment = f"K_{{{args.m},{args.m}}} on Z_{2 * args.m}, rotation (1, 3, ..., {2 * args.m - 1})"
        filename = f"k{args.m}{args.m}.map"
    else:
        m = mobius_kantor_map()
        comment = "P(8,3) with six octagonal faces (genus 2)"
        filename = "mobius_kantor.map"
    emit(args, format_map(m, comment=comment), filename)


# ---------------------------
# Parser
# ---------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--debug', action='store_true', help='Enable debug logging')
    common.add_argument('--tol', type=float, default=None,
                        help='Multiset matching tolerance (default: CUBIC_TOL or config, 1e-9)')
    common.add_argument('--int-tol', dest='int_tol', type=float, default=None,
                        help='Integer bucketing tolerance (default: CUBIC_INT_TOL or config, 1e-6)')
    common.add_argument('--config', type=str, default=None, help='Path to a JSON configuration file')
    common.add_argument('--save', action='store_true', help='Also save the output under CUBIC_OUTPUT_DIR')
    common.add_argument('-o', '--output', type=str, default=None, help='Write output to this file')

    parser = argparse.ArgumentParser(
        description='Simple eigenvalues of cubic graph families: generators, exact multiplicities, '
                    'sign partitions, rotation systems and verification sweeps'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('gen', parents=[common], help='Emit a family member as an edge list')
    p.add_argument('family', choices=family_names())
    p.add_argument('params', type=int, nargs='*')
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser('spectrum', parents=[common], help='Spectrum report of a graph')
    p.add_argument('graph', help="Edge-list file, '-' for stdin")
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser('mult', parents=[common], help='Exact multiplicity of an integer eigenvalue')
    p.add_argument('graph', help="Edge-list file, '-' for stdin")
    p.add_argument('lam', type=int, metavar='lambda')
    p.set_defaults(handler=cmd_mult)

    p = sub.add_parser('partition', parents=[common], help='Sign partition for eigenvalue 1')
    p.add_argument('graph', help="Edge-list file, '-' for stdin")
    p.add_argument('--signs', action='store_true', help='Print vertex,sign columns instead')
    p.set_defaults(handler=cmd_partition)

    p = sub.add_parser('certify-bipartite', parents=[common], help='Certificate for 1 and -1 both simple')
    p.add_argument('graph', help="Edge-list file, '-' for stdin")
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser('truncate', parents=[common], help='Truncation of a cubic multigraph')
    p.add_argument('graph', help="Edge-list file, '-' for stdin")
    p.set_defaults(handler=cmd_truncate)

    p = sub.add_parser('map-faces', parents=[common], help='Faces and genus of a map file')
    p.add_argument('map', help="Map file, '-' for stdin")
    p.set_defaults(handler=cmd_map_faces)

    p = sub.add_parser('map-truncate', parents=[common], help='Vertex truncation of a map file')
    p.add_argument('map', help="Map file, '-' for stdin")
    p.set_defaults(handler=cmd_map_truncate)

    p = sub.add_parser('cosine', parents=[common], help='Enumerated vs closed-form cosine solutions')
    p.add_argument('m', type=int)
    p.set_defaults(handler=cmd_cosine)

    p = sub.add_parser('verify', parents=[common], help='Sweep a family against the exact oracle')
    p.add_argument('family', choices=PREDICTOR_NAMES)
    p.add_argument('range', nargs='?', default=None, help="'a..b', 'a', or 'n:k' for gp")
    p.add_argument('--xlsx', type=str, default=None, help='Also write an Excel workbook')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('census', parents=[common], help='Census over a directory of map files')
    p.add_argument('directory', nargs='?', default=None, help='Defaults to the bundled maps')
    p.add_argument('--duals', action='store_true', help='Add a row for each usable dual')
    p.add_argument('--xlsx', type=str, default=None, help='Also write an Excel workbook')
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser('export-map', parents=[common], help='Emit a constructed map file')
    p.add_argument('kind', choices=['kmm', 'mobius-kantor'])
    p.add_argument('m', type=int, nargs='?', default=None)
    p.set_defaults(handler=cmd_export_map)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv and run one subcommand.

    Returns 0 on success (verify sweeps with DISAGREE rows included), 1 on a
    domain error. Usage errors exit with status 2 from argparse.
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.debug)
    try:
        config = load_config(args.config)
        settings = resolve_tolerances(config, args.tol, args.int_tol)
        settings["config"] = config
        settings["config_dir"] = Path(args.config).parent if args.config else DEFAULT_CONFIG_PATH.parent
        args.handler(args, settings)
    except (ValueError, OSError) as e:
        # CubicSpectraError is a ValueError; so is a malformed config file
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
