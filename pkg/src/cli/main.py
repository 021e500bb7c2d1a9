"""
Command-line front end for the curvature toolkit
"""
import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from src import __version__
from src.core.config import ToolkitSettings, get_settings
from src.core.exceptions import DefConnError, SchemaError, TheoremViolation
from src.core.serialization import load_document, parse_json, render_json, render_text, schema_text
from src.curvature.operator import CurvatureOperator, gromov_thurston_operator, operator_from_mapping
from src.definite.classification import classify
from src.definite.suites import run_lemma_suites
from src.definite.taming import taming_margin
from src.cohomogeneity.blocks import block_residuals, reconstruct_blocks
from src.cohomogeneity.families import BUILTIN_FAMILIES, MetricFamily, SigmaProfile, builtin_family
from src.cohomogeneity.paths import (
    Bundle,
    connection_path,
    default_r_grid,
    definite_path_margin,
    isotopy_path,
    isotopy_sweep,
)
from src.sectional.pinching import sectional_extrema
from src.sectional.verification import search_near_boundary, verify_pinching_theorem
from src.topology.invariants import (
    SurfaceData,
    adjunction_consistent,
    chern_numbers,
    chern_numbers_complex_hyperbolic,
    exceptional_curve,
    hitchin_thorpe_gate,
    twistor_degree,
)
from src.cli.schemas import ChernInput, FamilyInput, OperatorInput, SurfaceInput, validate_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

BUNDLES = {'plus': (Bundle.LAMBDA_PLUS,), 'minus': (Bundle.LAMBDA_MINUS,),
           'both': (Bundle.LAMBDA_PLUS, Bundle.LAMBDA_MINUS)}

Report = Dict[str, Any]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="Definiteness tolerance (default 1e-9 or DEFCONN_TOL)")
    common.add_argument("--grid", type=int, default=None, help="Sphere lattice points per axis (default 64)")
    common.add_argument("--seed", type=int, default=None, help="Random seed (default 42)")
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json", help="JSON report (default)")
    output.add_argument("--text", dest="output", action="store_const", const="text", help="Text report")
    common.set_defaults(output="json")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    return common


def _input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", help="JSON or YAML input document")
    parser.add_argument("--json-input", help="Inline JSON input document")


def _family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--builtin", choices=BUILTIN_FAMILIES, help="Built-in family")
    parser.add_argument("--n", type=int, help="Degree n of O(-n)")
    parser.add_argument("--k", type=int, help="Branching order of the Gromov-Thurston profile")
    parser.add_argument("--r0", type=float, help="Hyperbolic radius of the Gromov-Thurston profile")
    parser.add_argument("--blend", type=float, nargs=2, metavar=("START", "STOP"), help="Blend window")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="defconn",
        description="Definite connections, pinching and twistor invariants of four-manifolds",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="command", required=True)

    classify_cmd = verbs.add_parser("classify", parents=[common], help="Classify a curvature operator")
    _input_options(classify_cmd)
    _family_options(classify_cmd)
    classify_cmd.add_argument("--r", type=float, default=1.0, help="Radius for --builtin")
    classify_cmd.add_argument("--relaxed", action="store_true", help="Skip the Bianchi trace check")
    classify_cmd.add_argument("--strict", action="store_true", help="Fail on degenerate D operators")

    pinch = verbs.add_parser("pinch", parents=[common], help="Sectional curvature extremes and pinching")
    _input_options(pinch)
    _family_options(pinch)
    pinch.add_argument("--r", type=float, default=1.0, help="Radius for --builtin")
    pinch.add_argument("--relaxed", action="store_true", help="Skip the Bianchi trace check")

    family = verbs.add_parser("family", parents=[common], help="Definite-path test of a cohomogeneity-one family")
    _input_options(family)
    _family_options(family)
    family.add_argument("--bundle", choices=sorted(BUNDLES), default="both", help="Bundle of 2-forms")
    family.add_argument("--blocks", action="store_true", help="Reconstruct curvature blocks along the grid")

    isotopy = verbs.add_parser("isotopy", parents=[common], help="Sweep the isotopy from H4 to CH2")
    isotopy.add_argument("--t-points", type=int, default=21, help="Number of t values in [0, 1]")

    chern = verbs.add_parser("chern", parents=[common], help="Chern numbers of the twistor space")
    _input_options(chern)
    chern.add_argument("--chi", type=int, help="Euler characteristic")
    chern.add_argument("--tau", type=int, help="Signature")
    chern.add_argument("--sign", choices=("Positive", "Negative"), default="Positive")
    chern.add_argument("--complex-hyperbolic", action="store_true", help="tau is the complex-orientation signature")
    chern.add_argument("--d-sign", choices=("Dpos", "Dneg"), help="Also evaluate the topological gate")

    adjunction = verbs.add_parser("adjunction", parents=[common], help="Twistor degree of a surface")
    _input_options(adjunction)
    adjunction.add_argument("--euler", type=int)
    adjunction.add_argument("--self-intersection", type=int)
    adjunction.add_argument("--double-points", type=int, default=0)
    adjunction.add_argument("--branch-points", type=int, default=0)
    adjunction.add_argument("--exceptional", type=int, metavar="N", help="Embedded sphere with S.S = -N")
    adjunction.add_argument("--tamed", choices=("Jplus", "Jminus", "None"), help="Check the adjunction sign")

    verify = verbs.add_parser("verify", parents=[common], help="Randomized verification of the pinching theorem")
    verify.add_argument("--samples", type=int, default=10_000)
    verify.add_argument("--spread", type=float, default=0.12, help="Largest relative spread of sampled operators")
    verify.add_argument("--strengthened", action="store_true", help="Also check the taming inequalities")
    verify.add_argument("--suites", action="store_true", help="Run the randomized lemma suites")
    verify.add_argument("--near-boundary", action="store_true", help="Search for counterexamples below 2/5")
    return parser


def _meta(args: argparse.Namespace, settings: ToolkitSettings) -> Report:
    return {
        'version': __version__,
        'command': args.command,
        'tol': _tol(args, settings),
        'grid_n': _grid(args, settings),
        'refine_iters': settings.refine_iters,
        'seed': _seed(args, settings),
    }


def _tol(args: argparse.Namespace, settings: ToolkitSettings) -> float:
    return settings.tol if args.tol is None else args.tol


def _grid(args: argparse.Namespace, settings: ToolkitSettings) -> int:
    return settings.grid_n if args.grid is None else args.grid


def _seed(args: argparse.Namespace, settings: ToolkitSettings) -> int:
    return settings.seed if args.seed is None else args.seed


def _document(args: argparse.Namespace) -> Optional[Dict[str, Any]]:
    if getattr(args, "file", None):
        return load_document(args.file)
    if getattr(args, "json_input", None):
        document = parse_json(args.json_input)
        if not isinstance(document, dict):
            raise SchemaError("--json-input must be a JSON object")
        return document
    return None


def _family_params(args: argparse.Namespace) -> Dict[str, Any]:
    params = {'n': args.n, 'k': args.k, 'r0': args.r0, 'blend': tuple(args.blend) if args.blend else None}
    return {key: value for key, value in params.items() if value is not None}


def _operator(args: argparse.Namespace) -> Tuple[CurvatureOperator, Report]:
    if args.builtin:
        family = builtin_family(args.builtin, **_family_params(args))
        if isinstance(family, SigmaProfile):
            return gromov_thurston_operator(args.r, family), {'builtin': args.builtin, 'r': args.r, **family.to_dict()}
        return reconstruct_blocks(family, args.r), {'builtin': args.builtin, 'r': args.r, **family.params}
    document = _document(args)
    if document is None:
        raise SchemaError("no operator given: use --builtin, --file or --json-input",
                          schema=OperatorInput.model_json_schema())
    model = validate_document(OperatorInput, document)
    mapping = model.to_mapping()
    mapping['relaxed'] = model.relaxed or args.relaxed
    return operator_from_mapping(mapping), {'input': 'document'}


def cmd_classify(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    R, source = _operator(args)
    tol = _tol(args, settings)
    classification = classify(R, tol=tol, strict=args.strict)
    taming = taming_margin(R, grid_n=_grid(args, settings), tol=tol)
    return {
        'source': source,
        'operator': R,
        'classification': classification,
        'taming': taming,
    }, EXIT_OK


def cmd_pinch(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    R, source = _operator(args)
    extrema = sectional_extrema(R, grid_n=_grid(args, settings))
    classification = classify(R, tol=_tol(args, settings))
    return {
        'source': source,
        'operator': R,
        'pinching': extrema,
        'boundary': classification.boundary,
        'classification': classification,
    }, EXIT_OK


def _family(args: argparse.Namespace) -> Tuple[Optional[MetricFamily], FamilyInput]:
    document = _document(args)
    if document is None:
        if not args.builtin:
            raise SchemaError("no family given: use --builtin, --file or --json-input",
                              schema=FamilyInput.model_json_schema())
        document = {'builtin': args.builtin, **_family_params(args)}
    model = validate_document(FamilyInput, document)
    if model.isotopy_t is not None:
        return None, model
    if model.table is not None:
        table = model.table
        return MetricFamily.from_table(table.r, table.f1, table.f2, table.f3, fd_step=model.fd_step), model
    family = builtin_family(model.builtin, **model.builtin_params())
    if isinstance(family, SigmaProfile):
        raise SchemaError("GromovThurston is a sigma profile; use classify or pinch with --r")
    return family, model


def _path_summary(definite: bool, connection: Optional[Report]) -> str:
    if not definite:
        return "not definite"
    if connection and connection['verdict'] == "Definite":
        return f"definite, {connection['sign'].lower()}"
    return "definite"


def _block_entry(family: MetricFamily, r: float, tol: float) -> Report:
    R = reconstruct_blocks(family, r)
    return {
        'r': r,
        'operator': R,
        'classification': classify(R, tol=tol),
        'residuals': block_residuals(family, r),
    }


def cmd_family(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    family, model = _family(args)
    tol = _tol(args, settings)
    if family is None:
        grid = default_r_grid()
        verdict = definite_path_margin(isotopy_path(model.isotopy_t), grid, tol=tol)
        entry = verdict.to_dict()
        entry['summary'] = _path_summary(verdict.definite, None)
        return {'family': {'isotopy_t': model.isotopy_t}, 'paths': {Bundle.DIRECT.value: entry}}, EXIT_OK

    grid = np.asarray(model.table.r) if model.table is not None else default_r_grid(family)
    paths: Report = {}
    for bundle in BUNDLES[args.bundle]:
        verdict = definite_path_margin(connection_path(family, bundle), grid, tol=tol)
        entry = verdict.to_dict()
        connection = None
        if verdict.definite:
            middle = float(grid[len(grid) // 2])
            connection = classify(reconstruct_blocks(family, middle), tol=tol).to_dict()
            entry['connection'] = {key: connection[key] for key in ('verdict', 'orientation', 'sign')}
            entry['connection']['r'] = middle
        entry['summary'] = _path_summary(verdict.definite, connection)
        paths[bundle.value] = entry

    report: Report = {'family': family.to_dict(), 'paths': paths}
    if args.blocks:
        step = max(1, len(grid) // 8)
        report['blocks'] = [_block_entry(family, float(r), tol) for r in grid[::step]]
    return report, EXIT_OK


def cmd_isotopy(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    if args.t_points < 2:
        raise SchemaError("--t-points must be at least 2")
    t_values = np.linspace(0.0, 1.0, args.t_points)
    grid = default_r_grid()
    verdicts = isotopy_sweep(t_values, grid, tol=_tol(args, settings))
    sweep = [{'t': float(t), **verdict.to_dict()} for t, verdict in zip(t_values, verdicts)]
    return {
        'sweep': sweep,
        'all_definite': all(verdict.definite for verdict in verdicts),
        'r_grid': {'min': float(grid[0]), 'max': float(grid[-1]), 'points': int(grid.size)},
    }, EXIT_OK


def cmd_chern(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    document = _document(args)
    if document is None:
        if args.chi is None or args.tau is None:
            raise SchemaError("chern needs --chi and --tau, --file or --json-input",
                              schema=ChernInput.model_json_schema())
        document = {'chi': args.chi, 'tau': args.tau, 'sign': args.sign,
                    'complex_hyperbolic': args.complex_hyperbolic}
    model = validate_document(ChernInput, document)
    if model.complex_hyperbolic:
        invariants = chern_numbers_complex_hyperbolic(model.chi, model.tau)
    else:
        invariants = chern_numbers(model.chi, model.tau, model.sign)
    report: Report = {'invariants': invariants}
    if args.d_sign:
        report['gate'] = hitchin_thorpe_gate(invariants.chi, invariants.tau, args.d_sign)
    return report, EXIT_OK


def cmd_adjunction(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    document = _document(args)
    if document is not None:
        model = validate_document(SurfaceInput, document)
        surface = SurfaceData(**model.model_dump())
    elif args.exceptional is not None:
        surface = exceptional_curve(args.exceptional)
    elif args.euler is not None and args.self_intersection is not None:
        surface = SurfaceData(args.euler, args.self_intersection, args.double_points, args.branch_points)
    else:
        raise SchemaError("adjunction needs --euler and --self-intersection, --exceptional, --file or --json-input",
                          schema=SurfaceInput.model_json_schema())
    report: Report = {'surface': surface, 'twistor_degree': twistor_degree(surface)}
    if args.tamed:
        report['tamed_structure'] = args.tamed
        report['consistent'] = adjunction_consistent(surface, args.tamed)
    return report, EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: ToolkitSettings) -> Tuple[Report, int]:
    seed = _seed(args, settings)
    pinching = verify_pinching_theorem(
        args.samples,
        seed=seed,
        strengthened=args.strengthened,
        grid_n=_grid(args, settings),
        spread=args.spread,
        tol=_tol(args, settings),
    )
    report: Report = {'pinching': pinching}
    code = EXIT_OK
    if args.suites:
        suites = run_lemma_suites(n_samples=args.samples, seed=seed)
        report['suites'] = suites
        if suites.counterexamples:
            logger.error("lemma suites found %d counterexamples", suites.counterexamples)
            code = EXIT_VIOLATION
    if args.near_boundary:
        witness = search_near_boundary(seed=seed)
        report['near_boundary'] = witness
    return report, code


COMMANDS: Dict[str, Callable[[argparse.Namespace, ToolkitSettings], Tuple[Report, int]]] = {
    'classify': cmd_classify,
    'pinch': cmd_pinch,
    'family': cmd_family,
    'isotopy': cmd_isotopy,
    'chern': cmd_chern,
    'adjunction': cmd_adjunction,
    'verify': cmd_verify,
}


def _emit(report: Report, args: argparse.Namespace, out: TextIO) -> None:
    if args.output == "text":
        out.write(render_text(report))
    else:
        out.write(render_json(report).decode("utf-8"))


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Parse argv, dispatch to the verb and write the report.

    Returns:
        0 on success, 2 on input errors, 3 when a proven statement is contradicted
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    _configure_logging(args.verbose)

    try:
        settings = get_settings()
        report, code = COMMANDS[args.command](args, settings)
    except TheoremViolation as exc:
        logger.error("theorem violation: %s", exc)
        _emit({'meta': _meta(args, get_settings()), 'violation': str(exc), 'operator': exc.operator}, args, out)
        return EXIT_VIOLATION
    except SchemaError as exc:
        err.write(f"error: {exc}\n")
        if exc.schema is not None:
            err.write(schema_text(exc.schema) + "\n")
        return EXIT_INPUT
    except (DefConnError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT

    _emit({'meta': _meta(args, settings), **report}, args, out)
    return code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
