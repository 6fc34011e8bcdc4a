"""Batch command line: check, enumerate, zoo, export-dot.

Exit codes: 0 ok, 1 parse error, 2 precondition error, 3 resource cap.
"""

import argparse
import json
import sys

from . import constants
from .analysis import (PropertyReport, SP, co_sober_report, kd_failure, kl_report, q_determined_failure,
                       verify_strongly_prime_lemma, well_filtered_report)
from .domain import is_domain, quasicontinuity_failure
from .errors import CycleError, ParseError, PreconditionError, ResourceLimitError, WitnessError
from .experiments import (hypothesis_report, implication_matrix, matrix_all_zero, matrix_to_csv,
                          q_uniqueness_scan)
from .poset import export_dot, load_poset
from .topology import compute_Q
from . import zoo

PROPS = ("co-sober", "kd", "quasicts", "domain", "kl", "qdet", "wwf", "wf", "sp", "hypothesis-report")
EXPERIMENTS = ("q-uniqueness", "implication-matrix", "counts")
ACTIONS = ("claims", "order-axioms", "q-soundness", "noncompactness", "wwf-failure", "nonprincipal",
           "kd-cases", "truncate")

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _prop_report(P, prop, cap):
    if prop == "co-sober":
        return co_sober_report(P, compute_Q(P, cap=cap))
    if prop == "kd":
        x = kd_failure(P)
        return PropertyReport("kd", x is None, witness=None if x is None else P.elements[x])
    if prop == "quasicts":
        x = quasicontinuity_failure(P)
        return PropertyReport("quasicontinuous", x is None, witness=None if x is None else P.elements[x])
    if prop == "domain":
        ok = is_domain(P)
        return PropertyReport("domain", ok, witness=None if ok else "some way-below set is not directed to x")
    if prop == "kl":
        return kl_report(P, compute_Q(P, cap=cap))
    if prop == "qdet":
        hit = q_determined_failure(P, cap=cap)
        if hit is None:
            return PropertyReport("qdet", True, bounds={"q_cap": cap})
        Q, fam = hit
        return PropertyReport("qdet", False, bounds={"q_cap": cap},
                              witness=[P.format_set(Q.members[i]) for i in range(len(Q)) if fam >> i & 1])
    if prop in ("wwf", "wf"):
        return well_filtered_report(P, weak=prop == "wwf", Q=compute_Q(P, cap=cap))
    if prop == "sp":
        rep = verify_strongly_prime_lemma(P, cap=cap)
        sp = P.labels(SP(P, compute_Q(P, cap=cap)))
        return PropertyReport("sp", rep.verdict, witness=rep.witness,
                              notes=rep.notes + [f"strongly prime elements of P: {sorted(sp)}"])
    raise PreconditionError(f"unknown property {prop!r}")


def _emit_reports(reports, fmt, extra=None):
    if fmt == "json":
        out = {"reports": [r.to_dict() for r in reports], "constants": constants.as_dict()}
        out.update(extra or {})
        print(_dump(out))
    else:
        for r in reports:
            v = {True: "true", False: "false", None: "n/a"}[r.verdict]
            line = f"{r.property}: {v}"
            if r.witness is not None and r.verdict is not True:
                line += f"  witness={json.dumps(r.witness, sort_keys=True)}"
            print(line)
            for note in r.notes:
                print(f"  - {note}")


def cmd_check(args):
    P = load_poset(args.file)
    cap = args.q_cap
    props = [p.strip() for p in ",".join(args.props).split(",") if p.strip()]
    reports = []
    for prop in props:
        if prop == "hypothesis-report":
            reports.extend(hypothesis_report(P))
        else:
            reports.append(_prop_report(P, prop, cap))
    _emit_reports(reports, args.format, {"input": P.to_text()})
    return EXIT_OK


def cmd_enumerate(args):
    if args.experiment == "q-uniqueness":
        res = q_uniqueness_scan(args.n, workers=args.workers)
        if args.format == "json":
            print(_dump(res.to_dict()))
        else:
            print(res.summary())
    elif args.experiment == "implication-matrix":
        m = implication_matrix(args.n)
        if args.format == "json":
            print(_dump(dict(m, all_zero=matrix_all_zero(m))))
        else:
            sys.stdout.write(matrix_to_csv(m))
    else:
        from .enumerate import class_counts
        counts = class_counts(args.n)
        if args.format == "json":
            print(_dump({"counts": counts, "total": sum(counts)}))
        else:
            print(" ".join(map(str, counts)))
    return EXIT_OK


def _parse_params(items):
    out = {}
    for item in items or []:
        key, _, val = item.partition("=")
        try:
            out[key] = int(val)
        except ValueError:
            raise PreconditionError(f"parameter {item!r} must look like name=integer") from None
    return out


def cmd_zoo(args):
    S = zoo.get_entry(args.entry)
    cat = zoo.zoo_catalog()[S.name]
    params = _parse_params(args.param)
    eb = args.element_bound
    sb = args.bound if args.bound is not None else constants.SUBFAMILY_BOUND
    act = args.action
    if act == "claims":
        reports = [c.run() for c in cat.claims]
    elif act == "order-axioms":
        reports = [zoo.verify_order_axioms(S, args.bound or eb)]
    elif act == "q-soundness":
        if cat.claimed_q is None:
            raise PreconditionError(f"{S.name} has no claimed Q family")
        reports = [zoo.verify_claimed_q_soundness(S, cat.claimed_q, **params)]
    elif act == "noncompactness":
        if cat.noncompactness is None:
            raise PreconditionError(f"{S.name} has no non-compactness witness")
        reports = [zoo.verify_noncompactness(S, cat.noncompactness, eb, sb)]
    elif act == "wwf-failure":
        if cat.filtered is None:
            raise PreconditionError(f"{S.name} has no filtered-family witness")
        reports = [zoo.verify_wwf_failure(S, cat.filtered, sb, eb)]
    elif act == "nonprincipal":
        if S.name != "e23":
            raise PreconditionError("non-principality target is defined for e23")
        reports = [zoo.verify_nonprincipal(S, zoo.e23_meet_target, args.bound or constants.NONPRINCIPAL_BOUND)]
    elif act == "kd-cases":
        if S.name != "johnstone-top":
            raise PreconditionError("the K_D case replay is defined for johnstone-top")
        reports = [zoo.replay_kd_cases(args.bound or 30)]
    else:
        P = S.truncate(**params)
        if args.format == "dot":
            sys.stdout.write(export_dot(P, S.name.replace("-", "_")))
        elif args.format == "json":
            print(_dump({"entry": S.name, "poset": P.to_text(), "caveats": list(S.caveats)}))
        else:
            sys.stdout.write(P.to_text())
        return EXIT_OK
    _emit_reports(reports, args.format, {"entry": S.name})
    return EXIT_OK


def cmd_export_dot(args):
    if args.target in zoo.ENTRIES:
        S = zoo.ENTRIES[args.target]
        P = S.truncate(**_parse_params(args.param))
        name = S.name.replace("-", "_")
    else:
        P = load_poset(args.target)
        name = "P"
    sys.stdout.write(export_dot(P, name))
    return EXIT_OK


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="qsigma", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate properties of a poset file")
    c.add_argument("file")
    c.add_argument("--props", nargs="+", default=["co-sober"],
                   help="comma or space separated, from: " + ", ".join(PROPS))
    c.add_argument("--q-cap", type=_positive, default=constants.DEFAULT_Q_CAP)
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="run an experiment over all posets up to n")
    e.add_argument("n", type=_positive, nargs="?")
    e.add_argument("--n-max", type=_positive)
    e.add_argument("--experiment", choices=EXPERIMENTS, default="q-uniqueness")
    e.add_argument("--workers", type=_positive, default=1)
    e.add_argument("--format", choices=("json", "text"), default="text")
    e.set_defaults(func=cmd_enumerate)

    z = sub.add_parser("zoo", help="verify claims about an infinite example")
    z.add_argument("entry", help=", ".join(zoo.ENTRIES))
    z.add_argument("--action", choices=ACTIONS, default="claims")
    z.add_argument("--bound", type=_positive, help="subfamily bound (or element bound for order-axioms)")
    z.add_argument("--element-bound", type=_positive, default=constants.ELEMENT_BOUND)
    z.add_argument("--param", nargs="*", help="truncation parameters, name=value")
    z.add_argument("--format", choices=("json", "text", "dot"), default="text")
    z.set_defaults(func=cmd_zoo)

    d = sub.add_parser("export-dot", help="Hasse diagram of a poset file or zoo truncation")
    d.add_argument("target")
    d.add_argument("--param", nargs="*")
    d.set_defaults(func=cmd_export_dot)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "enumerate":
        args.n = args.n or args.n_max
        if args.n is None:
            print("error: give n or --n-max", file=sys.stderr)
            return EXIT_PRECONDITION
    try:
        return args.func(args)
    except (ParseError, CycleError, FileNotFoundError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (PreconditionError, WitnessError, ValueError) as e:
        print(f"precondition error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
