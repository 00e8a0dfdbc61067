"""Command line front end.

Subcommands: reduce, groebner-check, membership, certificate, normal-form,
punctured, mixed, cover, alon-furedi, count, verify, selftest.

Exit codes: 0 when the computed verdict is affirmative (or the command is
purely computational), 1 when the verdict is negative or hypotheses are
unmet, 2 when Condition (D) fails and the question is inapplicable, 3 on
parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from pathlib import Path

from . import __version__
from .alon_furedi import nonzero_bound
from .covering import (
    CoverInstance,
    affine_blocking_bound,
    blocking_audit,
    covering_audit,
)
from .errors import (
    CombnullError,
    Inapplicable,
    NotMember,
    ParseError,
    ScaleExceeded,
    UnsupportedField,
)
from .multiset_ideals import (
    level_certificate,
    level_membership,
    level_normal_form,
    min_extra_degree,
    mixed_certificate,
    mixed_membership,
    punctured_analysis,
    punctured_membership,
)
from .polynomials import Poly, format_poly, parse_poly, taylor_shift
from .reduction import MonicFamily, buchberger_certifies, reduce
from .rings import ZZ, Zmod, parse_ring
from .serialization import (
    certificate_to_json,
    family_to_json,
    grid_from_json,
    outcome_to_json,
    punctured_from_json,
    spec_from_json,
    verify_certificate_json,
)
from .staircase import (
    parse_expvec,
    punctured_staircase_count,
    staircase_count,
)
from .vanishing import certify_groebner

EXIT_YES = 0
EXIT_NO = 1
EXIT_INAPPLICABLE = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_arg(text: str) -> str:
    """Inline value, or @path to read from a file."""
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


_BARE_KEY = re.compile(r'([{,]\s*)([A-Za-z_][A-Za-z0-9_]*)(\s*:)')


def _loose_json(text: str):
    """JSON with tolerance for unquoted object keys, e.g. {S:[[0,1]]}."""
    text = _read_arg(text).strip()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    quoted = _BARE_KEY.sub(r'\1"\2"\3', text)
    try:
        return json.loads(quoted)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON argument: {exc}") from None


def _emit(args, payload, lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _infer_nvars(texts) -> int:
    n = 1
    for text in texts:
        for m in re.finditer(r"x(\d+)", text):
            n = max(n, int(m.group(1)))
    return n


def _poly_arg(args, text: str, nvars: int) -> Poly:
    return parse_poly(_read_arg(text), parse_ring(args.ring), nvars)


def _grid_arg(args, need_puncture: bool = False):
    doc = _loose_json(args.grid)
    ring = parse_ring(args.ring) if args.ring else None
    if need_puncture or "E" in doc:
        return punctured_from_json(doc, ring)
    return grid_from_json(doc, ring)


# -- handlers -------------------------------------------------------------------


def _cmd_reduce(args) -> int:
    texts = [args.poly] + list(args.basis)
    nvars = args.nvars or _infer_nvars([_read_arg(t) for t in texts])
    ring = parse_ring(args.ring)
    f = parse_poly(_read_arg(args.poly), ring, nvars)
    family = MonicFamily.build(
        [parse_poly(_read_arg(t), ring, nvars) for t in args.basis]
    )
    out = reduce(f, family)
    payload = outcome_to_json(out, f)
    lines = [f"quotient[{k}]: {format_poly(p)}" for k, p in out.quotient_map.items()]
    lines.append(f"remainder: {format_poly(out.remainder)}")
    lines.append(f"checks: {payload['checks']}")
    _emit(args, payload, lines)
    return EXIT_YES


def _cmd_groebner_check(args) -> int:
    ring = parse_ring(args.ring)
    if args.spec:
        spec = spec_from_json(_loose_json(args.spec), ring)
        nvars = spec.nvars
        family = MonicFamily.build(
            [parse_poly(_read_arg(t), ring, nvars) for t in args.basis]
        )
        report = certify_groebner(spec, family)
        payload = report.to_json_dict()
        lines = [
            f"condition (D) per axis: {list(report.condition_d)}",
            f"grid staircase count (zeta1): {report.grid_count}",
            f"leading staircase count (zeta2): {report.leading_count}",
            f"verdict: {report.verdict}",
        ]
        _emit(args, payload, lines)
        if report.verdict == "groebner":
            return EXIT_YES
        if report.verdict == "inapplicable":
            return EXIT_INAPPLICABLE
        return EXIT_NO
    texts = list(args.basis)
    nvars = args.nvars or _infer_nvars([_read_arg(t) for t in texts])
    family = MonicFamily.build(
        [parse_poly(_read_arg(t), ring, nvars) for t in texts]
    )
    ok = buchberger_certifies(family)
    payload = {"certified": ok, "basis": family_to_json(family)}
    _emit(args, payload, [f"certified: {ok}" if ok else "inconclusive"])
    return EXIT_YES if ok else EXIT_NO


def _cmd_membership(args) -> int:
    grid = _grid_arg(args)
    f = parse_poly(_read_arg(args.poly), grid.ring, grid.nvars)
    verdict = level_membership(f, grid, args.t)
    _emit(args, {"member": verdict, "t": args.t}, [str(verdict).lower()])
    return EXIT_YES if verdict else EXIT_NO


def _cmd_certificate(args) -> int:
    grid = _grid_arg(args)
    f = parse_poly(_read_arg(args.poly), grid.ring, grid.nvars)
    cert = level_certificate(f, grid, args.t)
    payload = certificate_to_json(cert)
    lines = [f"member of the level-{args.t} ideal; certificate:"]
    lines += [
        f"quotient[{k}]: {format_poly(p)}"
        for k, p in cert.quotient_map.items()
        if not p.is_zero()
    ]
    lines.append(f"support containment: {cert.support_ok}")
    _emit(args, payload, lines)
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_YES


def _cmd_normal_form(args) -> int:
    grid = _grid_arg(args)
    f = parse_poly(_read_arg(args.poly), grid.ring, grid.nvars)
    nf = level_normal_form(f, grid, args.t)
    _emit(args, {"normal_form": format_poly(nf)}, [format_poly(nf)])
    return EXIT_YES


def _cmd_punctured(args) -> int:
    pgrid = _grid_arg(args, need_puncture=True)
    f = parse_poly(_read_arg(args.poly), pgrid.ring, pgrid.nvars)
    verdict = punctured_membership(f, pgrid, args.t)
    if not args.analyze:
        _emit(args, {"member": verdict, "t": args.t}, [str(verdict).lower()])
        return EXIT_YES if verdict else EXIT_NO
    if not verdict:
        _emit(args, {"member": False, "t": args.t}, ["false"])
        return EXIT_NO
    report = punctured_analysis(f, pgrid, args.t)
    payload = {"member": True, "t": args.t, "analysis": report.to_json_dict()}
    lines = [
        "true",
        f"normal form: {format_poly(report.eta)}",
        f"divisor: {format_poly(report.divisor)}",
        f"cofactor: {format_poly(report.cofactor)}",
        f"degree bound: {report.degree_bound} (holds: {report.bound_holds})",
    ]
    _emit(args, payload, lines)
    return EXIT_YES


def _cmd_mixed(args) -> int:
    pgrid = _grid_arg(args, need_puncture=True)
    if args.min_extra_degree:
        value, witness = min_extra_degree(pgrid, args.t)
        payload = {"min_extra_degree": value, "witness": format_poly(witness)}
        _emit(args, payload, [f"{value}", f"witness: {format_poly(witness)}"])
        return EXIT_YES
    if not args.poly:
        raise _UsageError("mixed needs --poly unless --min-extra-degree is given")
    f = parse_poly(_read_arg(args.poly), pgrid.ring, pgrid.nvars)
    verdict = mixed_membership(f, pgrid, args.t)
    if args.certificate and verdict:
        cert = mixed_certificate(f, pgrid, args.t)
        payload = certificate_to_json(cert)
        _emit(args, payload, ["true", f"support containment: {cert.support_ok}"])
        return EXIT_YES
    _emit(args, {"member": verdict, "t": args.t}, [str(verdict).lower()])
    return EXIT_YES if verdict else EXIT_NO


def _cmd_cover(args) -> int:
    if args.bound_only:
        value = affine_blocking_bound(args.q, args.n, args.t)
        _emit(args, {"bound": value}, [str(value)])
        return EXIT_YES
    if args.points:
        pts = [parse_expvec(p) for p in args.points.split(";") if p.strip()]
        report = blocking_audit(args.q, args.n, args.t, pts)
        payload = report.to_json_dict()
        lines = [
            f"blocked: {report.blocked}",
            f"size: {report.size} (bound {report.bound})",
        ]
        if report.unblocked_hyperplane:
            eta, c = report.unblocked_hyperplane
            lines.append(f"unblocked hyperplane: <{eta}, x> = {c}")
        _emit(args, payload, lines)
        return EXIT_YES if report.blocked else EXIT_NO
    if args.instance:
        doc = _loose_json(args.instance)
        pgrid = punctured_from_json(doc["pgrid"])
        planes = []
        for plane in doc["planes"]:
            rho = parse_poly(plane["poly"], pgrid.ring, pgrid.nvars)
            planes.append((rho, int(plane.get("degree", rho.degree()))))
        inst = CoverInstance.build(pgrid, planes, int(doc["t"]))
        report = covering_audit(inst)
        payload = report.to_json_dict()
        lines = [f"verdict: {report.verdict}"]
        if report.verdict == "bound_holds":
            lines.append(
                f"sum of degrees {report.sum_degrees} >= product degree "
                f"{report.product_degree} >= {max(report.bounds)}"
            )
        _emit(args, payload, lines)
        return EXIT_YES if report.verdict == "bound_holds" else EXIT_NO
    raise _UsageError("cover needs --bound-only, --points, or --instance")


def _cmd_alon_furedi(args) -> int:
    ring = parse_ring(args.ring)
    supports_doc = _loose_json(args.supports)
    supports = [[ring.canon(v) if not isinstance(v, str) else ring.parse_element(v) for v in S] for S in supports_doc]
    nvars = len(supports)
    f = parse_poly(_read_arg(args.poly), ring, nvars)
    beta = parse_expvec(args.beta)
    report = nonzero_bound(f, supports, beta)
    payload = report.to_json_dict()
    lines = [
        f"mu: {report.mu}",
        f"bound: {report.bound}",
        f"actual nonzero count: {report.actual}",
    ]
    _emit(args, payload, lines)
    return EXIT_YES


def _cmd_count(args) -> int:
    alpha = parse_expvec(args.alpha)
    if args.gamma:
        gamma = parse_expvec(args.gamma)
        value = punctured_staircase_count(alpha, gamma, args.t)
    else:
        value = staircase_count(alpha, args.t)
    _emit(args, {"value": value}, [str(value)])
    return EXIT_YES


def _cmd_verify(args) -> int:
    doc = _loose_json(args.certificate)
    checks = verify_certificate_json(doc)
    _emit(args, checks, [f"{k}: {v}" for k, v in checks.items()])
    return EXIT_YES if checks["valid"] else EXIT_NO


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    failures = []
    for ring in (ZZ, Zmod(6)):
        for _ in range(25):
            nvars = rng.randint(1, 3)
            f = _random_poly(rng, ring, nvars)
            gs = []
            for _ in range(rng.randint(1, 2)):
                gs.append(_random_monic(rng, ring, nvars))
            family = MonicFamily.build(gs)
            out = reduce(f, family)
            checks = out.verify(f)
            if not all(checks.values()):
                failures.append(f"reduce checks failed over {ring}: {checks}")
            again = reduce(out.remainder, family)
            if again.remainder != out.remainder:
                failures.append(f"remainder not idempotent over {ring}")
            u = tuple(ring.canon(rng.randint(-2, 2)) for _ in range(nvars))
            back = taylor_shift(taylor_shift(f, u), tuple(ring.neg(v) for v in u))
            if back != f:
                failures.append(f"shift involution failed over {ring}")
    payload = {"seed": args.seed, "failures": failures, "passed": not failures}
    _emit(args, payload, ["pass" if not failures else "\n".join(failures)])
    return EXIT_YES if not failures else EXIT_NO


def _random_poly(rng, ring, nvars):
    terms = {}
    for _ in range(rng.randint(0, 6)):
        alpha = tuple(rng.randint(0, 3) for _ in range(nvars))
        terms[alpha] = ring.canon(rng.randint(-4, 4))
    return Poly(ring, nvars, terms)


def _random_monic(rng, ring, nvars):
    theta = tuple(rng.randint(0, 2) for _ in range(nvars))
    terms = {theta: ring.one}
    for _ in range(rng.randint(0, 3)):
        alpha = tuple(rng.randint(0, h) for h in theta)
        if alpha != theta:
            terms[alpha] = ring.canon(rng.randint(-3, 3))
    return Poly(ring, nvars, terms)


# -- parser ----------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="combnull", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring_required=True):
        p.add_argument("--ring", required=ring_required, help="ZZ, QQ, ZZ/<m>, GF(<p>)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("reduce", help="divide against a monic family")
    common(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--basis", action="append", required=True)
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("groebner-check", help="Buchberger or count certification")
    common(p)
    p.add_argument("--basis", action="append", required=True)
    p.add_argument("--spec", help="vanishing spec JSON (inline or @file)")
    p.add_argument("--nvars", type=int)
    p.set_defaults(func=_cmd_groebner_check)

    for name, func, extra in (
        ("membership", _cmd_membership, ()),
        ("certificate", _cmd_certificate, ("--out",)),
        ("normal-form", _cmd_normal_form, ()),
    ):
        p = sub.add_parser(name)
        common(p, ring_required=False)
        p.add_argument("--grid", required=True, help="grid JSON (inline or @file)")
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--poly", required=True)
        for opt in extra:
            p.add_argument(opt)
        p.set_defaults(func=func)

    p = sub.add_parser("punctured", help="punctured membership and analysis")
    common(p, ring_required=False)
    p.add_argument("--grid", required=True, help="grid JSON with an E entry")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--analyze", action="store_true")
    p.set_defaults(func=_cmd_punctured)

    p = sub.add_parser("mixed", help="mixed-ideal membership and certificates")
    common(p, ring_required=False)
    p.add_argument("--grid", required=True, help="grid JSON with an E entry")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--poly")
    p.add_argument("--certificate", action="store_true")
    p.add_argument("--min-extra-degree", action="store_true")
    p.set_defaults(func=_cmd_mixed)

    p = sub.add_parser("cover", help="covering audits and blocking bounds")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--bound-only", action="store_true")
    p.add_argument("--points", help="semicolon-separated points, e.g. (0,1);(1,0)")
    p.add_argument("--instance", help="cover instance JSON (inline or @file)")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("alon-furedi", help="nonzero-count lower bound")
    common(p)
    p.add_argument("--S", dest="supports", required=True, help="JSON list of axis sets")
    p.add_argument("--beta", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=_cmd_alon_furedi)

    p = sub.add_parser("count", help="staircase complement counts")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--alpha", required=True)
    p.add_argument("--gamma")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="re-check a serialized certificate")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--certificate", required=True, help="JSON (inline or @file)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selftest", help="seeded randomized identities")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inapplicable as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except NotMember as exc:
        print(f"not a member: {exc}", file=sys.stderr)
        return EXIT_NO
    except (ParseError, UnsupportedField, ScaleExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CombnullError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, KeyError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
