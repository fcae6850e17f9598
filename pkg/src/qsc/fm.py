"""Frenkel-Mukhin type algorithm for standard ``eps_{M|N}``.

Colored monomials are processed down the cone in order of height from the
highest l-weight.  Every unsaturated direction ``i`` is expanded with the
rank-1 character of ``beta_{i}(m)``; even nodes fail when that restriction
is not dominant, the odd node never fails.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from .cartan import EpsilonSeq
from .lweights import (
    Monomial,
    QChar,
    Spec,
    a_inverse,
    dominant_nonM,
    format_monomial,
    height_from,
    validate_highest,
)
from .restriction import local_qchar

SUCCESS = "Success"
FAILED = "Failed"
LIMIT = "LimitExceeded"

DEFAULT_MAX_MONOMIALS = 10 ** 5
DEFAULT_MAX_STEPS = 10 ** 6


@dataclass
class ColoredMonomial:
    m: Monomial
    color: List[int]
    mult: int

    def saturated(self) -> bool:
        return all(s == self.mult for s in self.color)


@dataclass(frozen=True, order=True)
class Edge:
    src: Monomial
    i: int
    a: Spec
    dst: Monomial


@dataclass
class FMResult:
    eps: EpsilonSeq
    highest: Monomial
    status: str
    qchar: QChar
    edges: Set[Edge] = field(default_factory=set)
    failed_at: Optional[Monomial] = None
    failed_direction: Optional[int] = None
    steps: int = 0

    @property
    def ok(self) -> bool:
        return self.status == SUCCESS

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return self.qchar.sorted_terms(self.eps, self.highest)

    def sorted_edges(self) -> List[Edge]:
        def key(e: Edge):
            return (sum(height_from(self.eps, self.highest, e.src)), format_monomial(e.src),
                    e.i, e.a.sort_key(), format_monomial(e.dst))
        return sorted(self.edges, key=key)


def _key(eps: EpsilonSeq, hw: Monomial, m: Monomial):
    return (sum(height_from(eps, hw, m)), format_monomial(m))


def run(eps: EpsilonSeq, hw: Monomial, max_monomials: int = DEFAULT_MAX_MONOMIALS,
        max_steps: int = DEFAULT_MAX_STEPS) -> FMResult:
    if not eps.is_standard() or eps.M == eps.N or eps.M == 0 or eps.N == 0:
        raise ValueError("the FM engine needs a standard eps_{M|N} with M != N, M, N > 0")
    validate_highest(eps, hw)
    rank = eps.n - 1
    M = eps.M
    states: Dict[Monomial, ColoredMonomial] = {hw: ColoredMonomial(hw, [0] * rank, 1)}
    edges: Set[Edge] = set()
    heap = [(_key(eps, hw, hw), hw)]
    steps = 0

    def result(status: str, at=None, direction=None) -> FMResult:
        return FMResult(eps, hw, status, QChar({m: st.mult for m, st in states.items()}),
                        edges, at, direction, steps)

    while heap:
        _, m = heapq.heappop(heap)
        st = states[m]
        if st.saturated():
            continue
        for i in range(1, rank + 1):
            diff = st.mult - st.color[i - 1]
            if diff <= 0:
                continue
            steps += 1
            if steps > max_steps:
                return result(LIMIT)
            if i != M and not dominant_nonM(eps, m, i):
                return result(FAILED, m, i)
            local = local_qchar(eps, i, m)
            present = {lifts for _, lifts in local.terms}
            for c, lifts in local.terms:
                if not lifts:
                    continue
                mu = m
                for b in lifts:
                    mu = mu * a_inverse(eps, i, b)
                add = c * diff
                target = states.get(mu)
                if target is None:
                    color = [0] * rank
                    color[i - 1] = add
                    states[mu] = ColoredMonomial(mu, color, add)
                    if len(states) > max_monomials:
                        return result(LIMIT)
                else:
                    target.color[i - 1] += add
                    target.mult = max(target.mult, target.color[i - 1])
                if not states[mu].saturated():
                    heapq.heappush(heap, (_key(eps, hw, mu), mu))
                seen = set()
                for k, b in enumerate(lifts):
                    if b in seen:
                        continue
                    seen.add(b)
                    parent_lifts = lifts[:k] + lifts[k + 1:]
                    if parent_lifts not in present:
                        continue
                    src = m
                    for pb in parent_lifts:
                        src = src * a_inverse(eps, i, pb)
                    edges.add(Edge(src, i, b, mu))
            st.color[i - 1] = st.mult
    return result(SUCCESS)


def lattice_class(eps: EpsilonSeq, kind: str, r: int, i: int) -> Tuple[int, int]:
    """(sign, exponent parity) allowed for edge parameters at node ``i``.

    ``kind`` is ``"Y"`` for the highest l-weight ``Y[r,1]`` and ``"Yt"`` for
    ``Yt[r,1]``.  Parameters live in ``q^x qt^(y + 2Z)``.
    """
    M = eps.M
    if kind == "Y":
        x, yy = (r - i + 1, 0) if i <= M else (M - r + 1, i - M)
    elif kind == "Yt":
        x, yy = (0, i - r + 1) if i >= M else (M - i, M - r + 1)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return (-1) ** (yy % 2), (x - yy) % 2


def lattice_violations(r: FMResult, kind: str, node: int) -> List[Edge]:
    """Edges whose parameter is off the lattice predicted for ``L(Y[node,1])``/``L(Yt[node,1])``."""
    bad = []
    for e in r.edges:
        sign, parity = lattice_class(r.eps, kind, node, e.i)
        if e.a.orbit != 0 or e.a.sign != sign or e.a.exp % 2 != parity:
            bad.append(e)
    return sorted(bad, key=lambda e: (e.i, e.a.sort_key()))


def _label(r: FMResult, m: Monomial, style: str) -> str:
    text = format_monomial(m, r.eps, style)
    c = r.qchar.mult(m)
    return text + (f" (×{c})" if c > 1 else "")


def to_dot(r: FMResult, style: str = "canonical") -> str:
    lines = ["digraph qchar {", "  node [shape=box];"]
    ids = {}
    for k, (m, _) in enumerate(r.sorted_terms()):
        ids[m] = f"n{k}"
        lines.append(f'  n{k} [label="{_label(r, m, style)}"];')
    for e in r.sorted_edges():
        lines.append(f'  {ids[e.src]} -> {ids[e.dst]} [label="{e.i},{e.a.to_text()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(r: FMResult) -> dict:
    out = {
        "status": r.status,
        "highest": format_monomial(r.highest),
        "terms": [{"m": format_monomial(m), "mult": c} for m, c in r.sorted_terms()],
        "edges": [{"from": format_monomial(e.src), "i": e.i, "a": e.a.to_text(), "to": format_monomial(e.dst)}
                  for e in r.sorted_edges()],
    }
    if r.status == FAILED:
        out["failed_at"] = format_monomial(r.failed_at)
        out["direction"] = r.failed_direction
    if r.status == LIMIT:
        out["steps"] = r.steps
    return out


def to_json(r: FMResult) -> str:
    return json.dumps(to_json_obj(r), indent=2)
