#!/usr/bin/env python3
"""Command-line front end: build, verify and analyse graded quasialgebras."""
import argparse
import logging
import sys

from quasi_core.CayleyDickson import (Involution, cd_double_algebra, cd_double_cochain,
                                      doubling_cross_check, is_strong_involution)
from quasi_core.CheckReport import CheckReport
from quasi_core.Cochains import cocycle_identities_check, trivial_cocycle, verify_cocycle
from quasi_core.Errors import InvalidParameter, NotAUnit, QuasialgError
from quasi_core.GradedModule import (GradedModule, regular_bimodule, verify_bimodule,
                                     verify_left_module, verify_right_module)
from quasi_core.GradedQuasialgebra import (is_quasicrossed_product, is_strongly_graded, left_inverse,
                                           right_inverse, verify_quasiassociativity)
from quasi_core.QuasialgConfig import QuasialgConfig
from quasi_core.QuasicrossedSystem import (QuasicrossedSystem, are_equivalent_products,
                                           are_equivalent_systems, build_product, component_algebra,
                                           verify_system)
from quasi_core.Scalar import parse_scalar
from quasi_core.StructureAnalyzer import (center, is_central_simple, is_semisimple_associative,
                                          is_simple, sigma_faithful)
from utils.pdf_report import generate_pdf
from utils.report_writer import render, table_lines
from utils.table_export import export_csv
from utils.workspace import Workspace, builtin, parse_element

logger = logging.getLogger("quasialg")

EXIT_PASS, EXIT_FAIL, EXIT_UNDECIDED, EXIT_ERROR = 0, 1, 2, 3

STATUS_EXIT = {
    "pass": EXIT_PASS, "yes": EXIT_PASS, "simple": EXIT_PASS, "equivalent": EXIT_PASS,
    "central": EXIT_PASS,
    "fail": EXIT_FAIL, "no": EXIT_FAIL, "no_found": EXIT_FAIL, "not_simple": EXIT_FAIL,
    "inequivalent": EXIT_FAIL, "not_central": EXIT_FAIL,
    "undecided": EXIT_UNDECIDED,
}


# --------------------------
# LOADING
# --------------------------
def load_subject(args, path=None, name=None):
    if args.builtin:
        return builtin(args.builtin, args.conductor)
    path = path or (args.inputs[0] if args.inputs else None)
    if path is None:
        raise InvalidParameter("give a definition file or --builtin")
    workspace = Workspace.from_file(path)
    return workspace.get(name or args.algebra or workspace.main_name())


def require_algebra(subject):
    if isinstance(subject, (QuasicrossedSystem, GradedModule)):
        raise InvalidParameter(f"{subject.name} is not an algebra")
    return subject


def summary(A):
    return {
        "algebra": A.name,
        "group_order": A.group.order,
        "dim": A.dim,
        "component_dims": " ".join(str(d) for d in A.component_dims()),
        "conductor": A.conductor,
        "cocycle_trivial": A.cocycle.is_trivial(),
        "one": A.one,
    }


def worst_exit(reports):
    codes = [STATUS_EXIT.get(r.status, EXIT_PASS if r.passed else EXIT_FAIL) for r in reports]
    if EXIT_FAIL in codes:
        return EXIT_FAIL
    if EXIT_UNDECIDED in codes:
        return EXIT_UNDECIDED
    return EXIT_PASS


def emit(args, subject, reports, info=None, table=None):
    sys.stdout.write(render(subject, reports, info=info, table=table, machine=args.machine))


# --------------------------
# CHECK BATTERIES
# --------------------------
def associativity_probe(A, jobs):
    """Informational: the associator sweep with phi forced to 1."""
    report = verify_quasiassociativity(A, trivial_cocycle(A.group, A.conductor), jobs=jobs)
    status = "associative" if report.passed else "nonassociative"
    return CheckReport("associativity", True, report.checked, report.witnesses, {"status": status})


def center_report(A):
    C = center(A)
    central = C.dim == 1 and C.contains(A.one)
    return CheckReport("center", central, A.dim, [],
                       {"status": "central" if central else "not_central", "dim": C.dim,
                        "basis": str(C)})


def algebra_core_checks(A, config):
    return [
        verify_cocycle(A.group, A.cocycle, jobs=config.jobs, seed=config.seed, config=config),
        cocycle_identities_check(A.cocycle),
        verify_quasiassociativity(A, jobs=config.jobs),
    ]


def module_checks(M):
    reports = []
    if M.left is not None:
        reports.append(verify_left_module(M))
    if M.right is not None:
        reports.append(verify_right_module(M))
    if M.left is not None and M.right is not None:
        reports.append(verify_bimodule(M))
    return reports


def system_checks(s, config):
    return [verify_system(s, jobs=config.jobs)]


def algebra_battery(A, config):
    core = algebra_core_checks(A, config)
    extra = [associativity_probe(A, config.jobs), is_strongly_graded(A),
             is_quasicrossed_product(A, seed=config.seed, samples=config.sample_count),
             center_report(A),
             is_simple(A, graded=True, seed=config.seed, samples=config.sample_count),
             is_central_simple(A, graded=True, seed=config.seed)]
    if all(r.passed for r in core):
        extra.append(verify_bimodule(regular_bimodule(A)))
        extra.append(is_semisimple_associative(component_algebra(A)))
    return core, extra


# --------------------------
# COMMANDS
# --------------------------
def cmd_build(args, config):
    subject = load_subject(args)
    if isinstance(subject, QuasicrossedSystem):
        subject = build_product(subject)
    if isinstance(subject, GradedModule):
        info = {"module": subject.name, "algebra": subject.algebra.name, "dim": subject.dim}
        emit(args, subject.name, [], info=info)
        return EXIT_PASS
    if args.csv:
        export_csv(subject, args.csv)
        logger.info("wrote %s", args.csv)
    emit(args, subject.name, [], info=summary(subject), table=table_lines(subject))
    return EXIT_PASS


def cmd_verify(args, config):
    subject = load_subject(args)
    if isinstance(subject, GradedModule):
        reports = module_checks(subject)
        emit(args, subject.name, reports)
        return worst_exit(reports)
    if isinstance(subject, QuasicrossedSystem):
        reports = system_checks(subject, config)
        emit(args, subject.name, reports + [sigma_faithful(subject)])
        return worst_exit(reports)
    reports = algebra_core_checks(subject, config)
    emit(args, subject.name, reports + [associativity_probe(subject, config.jobs)],
         info=summary(subject))
    return worst_exit(reports)


def cmd_mul(args, config):
    A = require_algebra(load_subject(args))
    if args.left is None or args.right is None:
        raise InvalidParameter("mul needs --left and --right")
    x, y = parse_element(A, args.left), parse_element(A, args.right)
    emit(args, A.name, [], info={"left": x, "right": y, "product": x * y})
    return EXIT_PASS


def cmd_invert(args, config):
    A = require_algebra(load_subject(args))
    if args.element is None:
        raise InvalidParameter("invert needs --element")
    u = parse_element(A, args.element)
    try:
        details = {"degree": A.group.labels[u.degree()], "left_inverse": left_inverse(u),
                   "right_inverse": right_inverse(u)}
        report = CheckReport("unit", True, 1, [], details)
    except NotAUnit as exc:
        report = CheckReport("unit", False, 1, [str(exc)], {"element": u})
    emit(args, A.name, [report])
    return worst_exit([report])


def cmd_center(args, config):
    A = require_algebra(load_subject(args))
    report = center_report(A)
    emit(args, A.name, [report])
    return worst_exit([report])


def cmd_simple(args, config):
    A = require_algebra(load_subject(args))
    report = is_simple(A, graded=not args.ungraded, seed=config.seed, samples=config.sample_count)
    emit(args, A.name, [report])
    return worst_exit([report])


def _s_values(A, text):
    return [parse_scalar(v, A.conductor) for v in text.split(",")]


def cmd_cd_double(args, config):
    A = require_algebra(load_subject(args))
    eps = parse_scalar(args.epsilon, A.conductor)
    if args.level == "cochain":
        if not hasattr(A, "cochain"):
            raise InvalidParameter("cochain-level doubling needs a deformed group algebra")
        s = _s_values(A, args.s) if args.s else \
            [1 if g == A.group.identity else -1 for g in range(A.group.order)]
        doubled, F_bar, s_bar = cd_double_cochain(A.group, A.cochain, s, eps)
        lab = doubled.labels
        info = {"group_order": doubled.order, "s_bar": " ".join(str(v) for v in s_bar)}
        table = [f"F({lab[g]},{lab[h]}) = {F_bar.values[g][h]}"
                 for g in range(doubled.order) for h in range(doubled.order)]
        report = doubling_cross_check(A.group, A.cochain, s, eps)
        emit(args, f"{A.name} doubled", [report], info=info, table=table)
        return worst_exit([report])
    inv = Involution.from_diagonal(A, _s_values(A, args.s)) if args.s else Involution.conjugation(A)
    strong = is_strong_involution(A, inv)
    D = cd_double_algebra(A, inv, eps)
    reports = [strong, verify_quasiassociativity(D, jobs=config.jobs)]
    emit(args, D.name, reports, info=summary(D), table=table_lines(D))
    return worst_exit(reports[1:])


def _equiv_pair(args):
    if args.builtin:
        raise InvalidParameter("equiv compares definition files, not builtins")
    if len(args.inputs) >= 2:
        return (load_subject(args, path=args.inputs[0]),
                load_subject(args, path=args.inputs[1], name=args.other))
    if len(args.inputs) == 1:
        workspace = Workspace.from_file(args.inputs[0])
        if args.algebra and args.other:
            return workspace.get(args.algebra), workspace.get(args.other)
        names = workspace.names("system") or workspace.names("algebra")
        if len(names) >= 2:
            return workspace.get(names[-2]), workspace.get(names[-1])
    raise InvalidParameter("equiv needs two systems or two algebras")


def cmd_equiv(args, config):
    first, second = _equiv_pair(args)
    if isinstance(first, QuasicrossedSystem) and isinstance(second, QuasicrossedSystem):
        report = are_equivalent_systems(first, second, seed=config.seed)
    else:
        report = are_equivalent_products(require_algebra(first), require_algebra(second),
                                         seed=config.seed)
    emit(args, f"{first.name} ~ {second.name}", [report])
    return worst_exit([report])


def cmd_report(args, config):
    subject = load_subject(args)
    info = None
    if isinstance(subject, GradedModule):
        core, extra = module_checks(subject), []
    elif isinstance(subject, QuasicrossedSystem):
        core = system_checks(subject, config)
        extra = [sigma_faithful(subject)]
        if all(r.passed for r in core):
            product = build_product(subject)
            extra.append(verify_quasiassociativity(product, jobs=config.jobs))
    else:
        core, extra = algebra_battery(subject, config)
        info = summary(subject)
    reports = core + extra
    emit(args, subject.name, reports, info=info)
    if args.pdf:
        path = generate_pdf(subject.name, reports, info=info, file_path=args.pdf)
        logger.info("wrote %s", path)
    return worst_exit(core)


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "mul": cmd_mul,
    "invert": cmd_invert,
    "center": cmd_center,
    "simple": cmd_simple,
    "cd-double": cmd_cd_double,
    "equiv": cmd_equiv,
    "report": cmd_report,
}


# --------------------------
# ARGUMENTS
# --------------------------
class UsageError(Exception):
    pass


class QuasialgArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; here that is an input error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    parser = QuasialgArgumentParser(prog="quasialg", description=__doc__)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="*", help="definition files (.qa)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--builtin", help="use a builtin algebra or module instead of a file")
    parser.add_argument("--algebra", help="section to use from a multi-section file")
    parser.add_argument("--other", help="second section for equiv")
    parser.add_argument("--conductor", type=int, default=1, help="conductor for builtins")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--machine", action="store_true", help="JSON report on stdout")
    parser.add_argument("--epsilon", default="-1", help="doubling parameter")
    parser.add_argument("--level", choices=("algebra", "cochain"), default="algebra")
    parser.add_argument("--s", help="diagonal involution values in basis order, e.g. '1,-1'")
    parser.add_argument("--ungraded", action="store_true", help="also search non-graded ideals")
    parser.add_argument("--element", help="element for invert")
    parser.add_argument("--left", help="left factor for mul")
    parser.add_argument("--right", help="right factor for mul")
    parser.add_argument("--csv", help="write the multiplication table (build)")
    parser.add_argument("--pdf", help="write a PDF report (report)")
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    config = QuasialgConfig(seed=args.seed, jobs=args.jobs)
    logger.debug("config: %s", config.get_config())
    try:
        return COMMANDS[args.command](args, config)
    except (QuasialgError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
