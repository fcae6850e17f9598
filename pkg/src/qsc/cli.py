"""Command-line front end: ``qsc {cartan,qchar,restrict,rank1,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import fm
from .cartan import (
    EpsilonSeq,
    closed_matrix,
    deformed_cartan,
    det_specialized,
    render_matrix,
    specialized_cartan,
    verify_inverse,
)
from .fixtures import verify as verify_fixtures
from .lweights import D_VAR, KIND_Y, KIND_YT, QChar, format_monomial, parse_monomial
from .rank1 import u01_normal_form
from .restriction import (
    RULE_LITERAL,
    RULE_SWAP_AT_M,
    Interval,
    beta,
    group_by_z,
    local_qchar,
    node_exps,
    tau,
)

EX_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _eps_std(text: str) -> EpsilonSeq:
    try:
        M, N = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--eps-std expects M,N, got {text!r}") from None
    if M <= 0 or N <= 0 or M == N:
        raise UsageError("--eps-std needs positive M != N")
    return EpsilonSeq.standard(M, N)


def _monomial(text: str, eps: EpsilonSeq):
    try:
        return parse_monomial(text, eps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_cartan(args) -> int:
    if args.eps_std:
        eps = _eps_std(args.eps_std)
    elif args.eps:
        try:
            eps = EpsilonSeq.parse(args.eps)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("give --eps or --eps-std")
    out = {"eps": "".join(map(str, eps.bits))}
    if args.specialize or args.invert:
        out["specialized"] = [[e.render() for e in row] for row in specialized_cartan(eps)]
    else:
        out["deformed"] = [[e.to_str() for e in row] for row in deformed_cartan(eps)]
    if args.invert:
        if not eps.is_standard() or eps.M == eps.N or eps.N == 0 or eps.M == 0:
            raise UsageError("--invert needs a standard sequence with M != N")
        det = det_specialized(eps.M, eps.N)
        out["det"] = det.value.render()
        out["det_matches_cofactor"] = det.matches_cofactor
        out["d_D_inverse"] = [[e.render() for e in row] for row in closed_matrix(eps.M, eps.N)]
        out["inverse_verified"] = verify_inverse(eps.M, eps.N)
    if args.json:
        print(json.dumps(out, indent=2))
        return 0
    print(f"eps = {out['eps']}")
    if "deformed" in out:
        print("C(q, qt):")
        print(render_matrix(deformed_cartan(eps)))
    if "specialized" in out:
        print("C(q^r, (-q^-1)^r):")
        print(render_matrix(specialized_cartan(eps)))
    if args.invert:
        print(f"det(C D) = {out['det']}  (cofactor check: {'ok' if out['det_matches_cofactor'] else 'MISMATCH'})")
        print("d D C^-1:")
        print(render_matrix(closed_matrix(eps.M, eps.N)))
        print(f"inverse verified: {out['inverse_verified']}")
    return 0


def cmd_qchar(args) -> int:
    eps = _eps_std(args.eps_std)
    hw = _monomial(args.hw, eps)
    try:
        r = fm.run(eps, hw, max_steps=args.max_steps, max_monomials=args.max_monomials)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.dot:
        _write(args.dot, fm.to_dot(r, args.style))
    if args.json:
        _write(args.json, fm.to_json(r) + "\n")
    print(f"status: {r.status}")
    print(f"highest: {format_monomial(hw, eps, args.style)}")
    print(f"terms: {len(r.qchar)}  dimension: {r.qchar.dimension()}")
    for m, c in r.sorted_terms():
        print(f"  {c}  {format_monomial(m, eps, args.style)}")
    if r.status == fm.FAILED:
        print(f"failed at: {format_monomial(r.failed_at, eps, args.style)}  direction: {r.failed_direction}")
        return 2
    if r.status == fm.LIMIT:
        print(f"limit exceeded after {r.steps} steps")
        return 3
    return 0


def _restricted_json(r) -> dict:
    return {"inner": format_monomial(r.inner),
            "z": [{"j": k.node, "b": k.spec.to_text(), "exp": e} for k, e in r.z]}


def cmd_restrict(args) -> int:
    eps = _eps_std(args.eps_std)
    try:
        J = Interval.parse(args.J)
        J.check(eps)
    except ValueError as exc:
        raise UsageError(f"bad --J: {exc}") from None
    if (args.m is None) == (args.qchar is None):
        raise UsageError("give exactly one of --m or --qchar")
    if args.m is not None:
        m = _monomial(args.m, eps)
        if args.mode == "beta":
            out = {"mode": "beta", "inner": format_monomial(beta(eps, J, m))}
        else:
            out = dict(mode="tau", **_restricted_json(tau(eps, J, m, args.rule)))
    else:
        try:
            with open(args.qchar, encoding="utf-8") as fh:
                chi = QChar.from_json_obj(json.load(fh), eps)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read {args.qchar}: {exc}") from None
        if args.mode == "beta":
            agg = {}
            for m, c in chi.terms.items():
                b = beta(eps, J, m)
                agg[b] = agg.get(b, 0) + c
            out = dict(mode="beta", **QChar(agg).to_json_obj())
        else:
            groups = group_by_z(eps, J, chi, args.rule)
            out = {"mode": "tau", "groups": [
                {"z": [{"j": k.node, "b": k.spec.to_text(), "exp": e} for k, e in z],
                 "terms": g.to_json_obj()["terms"]} for g, z in groups]}
    print(json.dumps(out, indent=2))
    return 0


def cmd_rank1(args) -> int:
    eps = _eps_std(args.eps_std)
    m = _monomial(args.m, eps)
    i = args.node
    if not 1 <= i <= eps.n - 1:
        raise UsageError(f"--node must lie in 1..{eps.n - 1}")
    restricted = beta(eps, [i], m)
    out = {"node": i, "restricted": format_monomial(restricted)}
    if i == eps.M:
        nf = u01_normal_form(node_exps(m, KIND_Y, i), {}, m.exponent(D_VAR))
        out["normal_form"] = {
            "s": nf.s,
            "ystrings": [{"start": s.start.to_text(), "len": s.len} for s in nf.ystrings],
            "ytstrings": [{"start": s.start.to_text(), "len": s.len} for s in nf.ytstrings],
        }
    else:
        kind = KIND_Y if i < eps.M else KIND_YT
        if any(e < 0 for e in node_exps(m, kind, i).values()):
            raise UsageError("restriction to an even node must be dominant")
    ch = local_qchar(eps, i, m)
    out["lattice"] = "u01" if i == eps.M else ("q^2" if i < eps.M else "qt^2")
    out["terms"] = [{"coef": c, "lifts": [b.to_text() for b in lifts]} for c, lifts in ch.terms]
    print(json.dumps(out, indent=2))
    return 0


def cmd_verify(args) -> int:
    try:
        reports = verify_fixtures(args.names or None)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    for r in reports:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}" + (f"  {r.message}" if r.message else ""))
    bad = sum(not r.ok for r in reports)
    print(f"{len(reports) - bad}/{len(reports)} fixtures passed")
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qsc", description="q-characters for U(eps) of type A(M|N)")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("cartan", help="deformed Cartan matrix, specialization and inverse")
    c.add_argument("--eps", help="01-sequence, e.g. 0011")
    c.add_argument("--eps-std", help="M,N for the standard sequence")
    c.add_argument("--specialize", action="store_true", help="show C(q^r, (-q^-1)^r)")
    c.add_argument("--invert", action="store_true", help="determinant and closed-form inverse")
    c.add_argument("--json", action="store_true", help="JSON output")
    c.set_defaults(func=cmd_cartan)

    q = sub.add_parser("qchar", help="run the FM algorithm")
    q.add_argument("--eps-std", required=True)
    q.add_argument("--hw", required=True, help='highest l-weight, e.g. "Y[1,q^0]"')
    q.add_argument("--dot", help="write a DOT graph here")
    q.add_argument("--json", help="write the JSON result here")
    q.add_argument("--max-steps", type=int, default=fm.DEFAULT_MAX_STEPS)
    q.add_argument("--max-monomials", type=int, default=fm.DEFAULT_MAX_MONOMIALS)
    q.add_argument("--style", choices=["canonical", "tilde"], default="canonical")
    q.set_defaults(func=cmd_qchar)

    r = sub.add_parser("restrict", help="beta_J / tau_J restriction")
    r.add_argument("--eps-std", required=True)
    r.add_argument("--J", required=True, help="node interval p..p'")
    r.add_argument("--mode", choices=["beta", "tau"], default="tau")
    r.add_argument("--rule", choices=[RULE_SWAP_AT_M, RULE_LITERAL], default=RULE_SWAP_AT_M)
    r.add_argument("--m", help="a monomial")
    r.add_argument("--qchar", help="a q-character JSON file")
    r.set_defaults(func=cmd_restrict)

    k = sub.add_parser("rank1", help="rank-1 normal form and character")
    k.add_argument("--eps-std", required=True)
    k.add_argument("--node", type=int, required=True)
    k.add_argument("--m", required=True)
    k.set_defaults(func=cmd_rank1)

    v = sub.add_parser("verify", help="run the golden fixture suite")
    v.add_argument("names", nargs="*")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qsc: error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
