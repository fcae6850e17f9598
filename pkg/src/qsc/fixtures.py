"""Golden examples: hand-transcribed q-characters and FM graphs.

The data lives in ``data/fixtures.json``.  Monomials may use ``Yt[M, .]``;
the loader canonicalizes them.  Expected characters are given either as an
explicit term list (optionally times a prefactor), as ``hw * sum prod A^-1``
words (``cone``), or as a graph (``nodes`` + ``edges``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .cartan import EpsilonSeq
from .lweights import (
    Monomial,
    NotInRootLattice,
    QChar,
    Spec,
    a_inverse,
    format_monomial,
    height_from,
    parse_monomial,
    parse_spec,
    y,
    yt,
)

EdgeT = Tuple[Monomial, int, Spec, Monomial]


@dataclass
class Fixture:
    name: str
    M: int
    N: int
    hw: Monomial
    status: str = "Success"
    expected: Optional[QChar] = None
    edges: Optional[List[EdgeT]] = None
    failed_at: Optional[Monomial] = None
    direction: Optional[int] = None
    missing: List[Monomial] = field(default_factory=list)
    alt_expected: List[QChar] = field(default_factory=list)

    @property
    def eps(self) -> EpsilonSeq:
        return EpsilonSeq.standard(self.M, self.N)


@lru_cache(maxsize=1)
def _raw() -> Dict[str, dict]:
    text = resources.files("qsc").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    return json.loads(text)


def names() -> List[str]:
    return sorted(_raw())


def _cone_qchar(eps: EpsilonSeq, hw: Monomial, words) -> QChar:
    out: Dict[Monomial, int] = {}
    for word in words:
        m = hw
        for i, a in word:
            m = m * a_inverse(eps, i, parse_spec(a))
        out[m] = out.get(m, 0) + 1
    return QChar(out)


FAMILIES = {"eps001-KR-Y": range(1, 5), "eps001-KR-Yt": range(1, 4)}


def fixture(name: str, s: Optional[int] = None) -> Fixture:
    """Look up a fixture; KR families take ``s`` (or a ``-s<k>`` suffix)."""
    raw = _raw()
    if name in FAMILIES:
        if s is None:
            raise KeyError(f"fixture family {name!r} needs s in {list(FAMILIES[name])}")
        name = f"{name}-s{s}"
    if name not in raw:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(names())}")
    d = raw[name]
    eps = EpsilonSeq.standard(d["M"], d["N"])
    P = lambda s: parse_monomial(s, eps)  # noqa: E731
    hw = P(d["hw"])
    fx = Fixture(name, d["M"], d["N"], hw, d.get("status", "Success"))
    candidates: List[QChar] = []
    if "terms" in d:
        pre = P(d.get("prefactor", "1"))
        candidates.append(QChar({P(t) * pre: 1 for t in d["terms"]}))
    if "cone" in d:
        candidates.append(_cone_qchar(eps, hw, d["cone"]))
    if "nodes" in d:
        nodes = [P(s) for s in d["nodes"]]
        mults = d.get("mults", [1] * len(nodes))
        candidates.append(QChar(dict(zip(nodes, mults))))
        fx.edges = [(nodes[a], i, parse_spec(b), nodes[c]) for a, i, b, c in d["edges"]]
    if candidates:
        fx.expected = candidates[0]
        fx.alt_expected = candidates[1:]
    if "failed_at" in d:
        fx.failed_at = P(d["failed_at"])
        fx.direction = d["direction"]
    fx.missing = [P(s) for s in d.get("missing", [])]
    return fx


def check_fixture(fx: Fixture) -> List[str]:
    """Engine-independent consistency checks; returns problems found."""
    eps = fx.eps
    problems = []
    forms = ([fx.expected] if fx.expected else []) + fx.alt_expected
    for k in range(1, len(forms)):
        if forms[k] != forms[0]:
            problems.append(f"{fx.name}: alternative expected forms disagree")
    for m in (fx.expected or QChar()):
        try:
            h = height_from(eps, fx.hw, m)
        except NotInRootLattice:
            problems.append(f"{fx.name}: {format_monomial(m)} is not below the highest weight")
            continue
        if min(h) < 0:
            problems.append(f"{fx.name}: {format_monomial(m)} has negative height {h}")
    for src, i, a, dst in fx.edges or []:
        if src * a_inverse(eps, i, a) != dst:
            problems.append(f"{fx.name}: edge ({i},{a}) from {format_monomial(src)} does not reach {format_monomial(dst)}")
    return problems


def fund_lweight_of_column(eps: EpsilonSeq, i: int, a: Spec = Spec()) -> Monomial:
    """Highest l-weight of the evaluation module on a column of height ``i``."""
    M, N = eps.M, eps.N
    if not 1 <= i <= M:
        raise ValueError(f"column height {i} outside 1..{M}")
    b = a.mul_q(N - M)
    if (i + 1 + M) % 2:
        b = b.neg()
    return y(i, b)


def fund_lweight_of_dual_column(eps: EpsilonSeq, i: int, a: Spec = Spec()) -> Monomial:
    """Highest l-weight of the dual of the column module of height ``i``."""
    M, N, n = eps.M, eps.N, eps.n
    if not 1 <= i <= M:
        raise ValueError(f"column height {i} outside 1..{M}")
    b = a.mul_q(2 * N - 2 * M)
    if (n - i + 1) % 2:
        b = b.neg()
    return yt(eps, n - i, b)


@dataclass
class FixtureReport:
    name: str
    ok: bool
    message: str = ""


def compare(fx: Fixture, result) -> List[str]:
    """Differences between an FM result and the fixture."""
    out = []
    if result.status != fx.status:
        out.append(f"status {result.status} != {fx.status}")
    if fx.status == "Failed":
        if result.failed_at != fx.failed_at or result.failed_direction != fx.direction:
            out.append("failure location differs")
    if fx.expected is not None and result.qchar != fx.expected:
        got, want = set(result.qchar.terms.items()), set(fx.expected.terms.items())
        extra = sorted(format_monomial(m) + f" x{c}" for m, c in got - want)
        lack = sorted(format_monomial(m) + f" x{c}" for m, c in want - got)
        out.append(f"q-character differs: unexpected {extra}, missing {lack}")
    if fx.edges is not None:
        got_e = {(e.src, e.i, e.a, e.dst) for e in result.edges}
        if got_e != set(fx.edges):
            out.append(f"edges differ: {len(got_e ^ set(fx.edges))} mismatched")
    for m in fx.missing:
        if m in result.qchar:
            out.append(f"{format_monomial(m)} unexpectedly present")
    return out


def verify(selected: Optional[List[str]] = None) -> List[FixtureReport]:
    from .fm import run

    reports = []
    for name in selected or names():
        fx = fixture(name)
        problems = check_fixture(fx)
        problems += compare(fx, run(fx.eps, fx.hw))
        reports.append(FixtureReport(name, not problems, "; ".join(problems)))
    return reports
