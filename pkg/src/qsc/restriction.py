"""Restriction of l-weights to an interval ``J`` of nodes.

``beta`` simply forgets every variable whose node lies outside ``J``.
``tau`` also keeps track of the forgotten part through auxiliary variables
``Z[j, b]`` (``j`` outside ``J``), whose exponents come from the inverse of
the specialized Cartan matrix.  Inner monomials keep global node labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from .cartan import EpsilonSeq, p_coeff_tables
from .lweights import (
    D_VAR,
    KIND_D,
    KIND_Y,
    KIND_YT,
    Monomial,
    QChar,
    Spec,
    Var,
    a_inverse,
    weight,
)
from . import rank1

RULE_SWAP_AT_M = "swap-at-M"
RULE_LITERAL = "literal"


class ZKey(NamedTuple):
    node: int
    spec: Spec

    def sort_key(self):
        return (self.node,) + self.spec.sort_key()


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int  # inclusive

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """``"p..p'"`` (inclusive) or a single node ``"p"``."""
        if ".." in text:
            a, b = text.split("..", 1)
            return cls(int(a), int(b))
        return cls(int(text), int(text))

    @classmethod
    def of(cls, nodes) -> "Interval":
        nodes = sorted(set(nodes))
        if not nodes or nodes != list(range(nodes[0], nodes[-1] + 1)):
            raise ValueError(f"{nodes} is not an interval of nodes")
        return cls(nodes[0], nodes[-1])

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def nodes(self) -> range:
        return range(self.lo, self.hi + 1)

    def check(self, eps: EpsilonSeq) -> None:
        if not 1 <= self.lo <= self.hi <= eps.n - 1:
            raise ValueError(f"interval {self.lo}..{self.hi} is not inside 1..{eps.n - 1}")


def _interval(J, eps: EpsilonSeq) -> Interval:
    J = J if isinstance(J, Interval) else Interval.of(J)
    J.check(eps)
    return J


class RestrictedMonomial:
    """``inner * prod Z[j, b]^{e}``."""

    __slots__ = ("inner", "z", "_hash")

    def __init__(self, inner: Monomial, z: Optional[Mapping[ZKey, int]] = None):
        self.inner = inner
        items = sorted(((k, e) for k, e in (z or {}).items() if e), key=lambda ke: ke[0].sort_key())
        self.z: Tuple[Tuple[ZKey, int], ...] = tuple(items)
        self._hash = hash((inner, self.z))

    def __mul__(self, other: "RestrictedMonomial") -> "RestrictedMonomial":
        z = dict(self.z)
        for k, e in other.z:
            z[k] = z.get(k, 0) + e
        return RestrictedMonomial(self.inner * other.inner, z)

    def __eq__(self, other) -> bool:
        return isinstance(other, RestrictedMonomial) and self.inner == other.inner and self.z == other.z

    def __hash__(self) -> int:
        return self._hash

    def z_text(self) -> str:
        return " ".join(f"Z[{k.node},{k.spec.to_text()}]" + ("" if e == 1 else f"^{e}") for k, e in self.z) or "1"

    def __repr__(self) -> str:
        return f"RestrictedMonomial({self.inner} | {self.z_text()})"


def beta(eps: EpsilonSeq, J, m: Monomial) -> Monomial:
    J = _interval(J, eps)
    keep = {}
    for v, e in m.items:
        if v.kind == KIND_D:
            if eps.M in J:
                keep[v] = e
        elif v.node in J:
            keep[v] = e
    return Monomial(keep)


def _add_z(z: Dict[ZKey, int], eps: EpsilonSeq, J: Interval, i: int, a: Spec, e: int, swap: bool) -> None:
    M, N = eps.M, eps.N
    for j in range(1, eps.n):
        if j in J:
            continue
        p, pp = p_coeff_tables(M, N, i, j)
        if swap:
            p, pp = pp, p
        for k, c in p.items():
            key = ZKey(j, a.mul_q(k))
            z[key] = z.get(key, 0) + e * c
        for k, c in pp.items():
            key = ZKey(j, a.neg().mul_q(k))
            z[key] = z.get(key, 0) + e * c


def tau_generator(eps: EpsilonSeq, J, kind: str, i: int, a: Spec, e: int = 1,
                  rule: str = RULE_SWAP_AT_M) -> RestrictedMonomial:
    """Image of a single generator ``Y[i,a]^e`` or ``Yt[i,a]^e`` (``Yt[M]`` allowed raw)."""
    if not eps.is_standard():
        raise ValueError("tau is only defined for the standard epsilon sequence")
    J = _interval(J, eps)
    M = eps.M
    z: Dict[ZKey, int] = {}
    if kind == "Y":
        inner = Monomial({Var(KIND_Y, i, a): e}) if i in J else Monomial()
        _add_z(z, eps, J, i, a, e, swap=False)
    elif kind == "Yt":
        if i in J:
            if i == M:
                inner = Monomial({D_VAR: e, Var(KIND_Y, M, a.neg()): -e})
            else:
                inner = Monomial({Var(KIND_YT, i, a): e})
        else:
            inner = Monomial()
        swap = (i == M) if rule == RULE_SWAP_AT_M else (i in J)
        _add_z(z, eps, J, i, a, -e, swap=swap)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return RestrictedMonomial(inner, z)


def tau(eps: EpsilonSeq, J, m: Monomial, rule: str = RULE_SWAP_AT_M) -> RestrictedMonomial:
    """Multiplicative extension; ``D`` maps to its inner image with no Z part."""
    if rule not in (RULE_SWAP_AT_M, RULE_LITERAL):
        raise ValueError(f"unknown rule {rule!r}")
    J = _interval(J, eps)
    out = RestrictedMonomial(Monomial())
    for v, e in m.items:
        if v.kind == KIND_D:
            part = RestrictedMonomial(Monomial({D_VAR: e}) if eps.M in J else Monomial())
        elif v.kind == KIND_Y:
            part = tau_generator(eps, J, "Y", v.node, v.spec, e, rule)
        else:
            part = tau_generator(eps, J, "Yt", v.node, v.spec, e, rule)
        out = out * part
    return out


def tau_of_d(eps: EpsilonSeq, J, a: Spec, rule: str = RULE_SWAP_AT_M) -> RestrictedMonomial:
    """``tau(Y[M,a]) * tau(Yt[M,-a])`` computed generator by generator."""
    M = eps.M
    return tau_generator(eps, J, "Y", M, a, 1, rule) * tau_generator(eps, J, "Yt", M, a.neg(), 1, rule)


def group_by_z(eps: EpsilonSeq, J, chi: QChar,
               rule: str = RULE_SWAP_AT_M) -> List[Tuple[QChar, Tuple[Tuple[ZKey, int], ...]]]:
    """Split ``tau(chi)`` by Z-monomial; groups in order of first appearance by sorted term."""
    groups: Dict[Tuple[Tuple[ZKey, int], ...], Dict[Monomial, int]] = {}
    for m, c in chi.sorted_terms():
        r = tau(eps, J, m, rule)
        g = groups.setdefault(r.z, {})
        g[r.inner] = g.get(r.inner, 0) + c
    return [(QChar(g), z) for z, g in groups.items()]


def node_exps(m: Monomial, kind: int, node: int) -> Dict[Spec, int]:
    return {v.spec: e for v, e in m.items if v.kind == kind and v.node == node}


def local_qchar(eps: EpsilonSeq, i: int, m: Monomial) -> rank1.Rank1Char:
    """Rank-1 character of ``L(beta_{i}(m))`` from the matching oracle."""
    M = eps.M
    if i < M:
        return rank1.sl2_simple_qchar(rank1.sl2_decompose(node_exps(m, KIND_Y, i), rank1.STEP_Q), m)
    if i > M:
        return rank1.sl2_simple_qchar(rank1.sl2_decompose(node_exps(m, KIND_YT, i), rank1.STEP_QT), m)
    return rank1.u01_qchar(node_exps(m, KIND_Y, M), {}, m.exponent(D_VAR), m)


def decompose_rank1(eps: EpsilonSeq, i: int, chi: QChar) -> Optional[List[Tuple[Monomial, int]]]:
    """Write a node-``i`` character as a sum of simple rank-1 characters.

    Returns the highest l-weights with multiplicities, or None when ``chi``
    is not such a sum (a negative remainder or a non-dominant top term).
    """
    rest = dict(chi.terms)
    alpha = [0] * eps.n
    alpha[i - 1], alpha[i] = 1, -1
    out: List[Tuple[Monomial, int]] = []

    def level(m: Monomial) -> int:
        # weights within a group differ by multiples of alpha_i
        return weight(eps, m)[i - 1] - weight(eps, m)[i]

    while rest:
        top = max(rest, key=lambda m: (level(m), m.sort_key()))
        if i != eps.M and any(e < 0 for v, e in top.items
                              if v.node == i and v.kind in (KIND_Y, KIND_YT)):
            return None
        c = rest[top]
        out.append((top, c))
        for k, lifts in local_qchar(eps, i, top).terms:
            mono = top
            for b in lifts:
                mono = mono * beta(eps, [i], a_inverse(eps, i, b))
            left = rest.get(mono, 0) - c * k
            if left < 0:
                return None
            if left:
                rest[mono] = left
            else:
                rest.pop(mono, None)
    return out
