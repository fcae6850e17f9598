"""Rank-1 q-character oracles.

Two local models are needed by the FM engine:

* an even node, where the restriction is a ``U_q(sl2)``-type module and
  characters come from the classical string (q-segment) decomposition;
* the odd node ``M``, a ``U(01)``-type rank-1 algebra whose simple
  characters are products of two-term factors ``(1 + D^-1)``, one per string.

Spectral data are plain ``Spec`` values; a lattice step ``+2`` means strings
``a, aq^2, ...`` and ``-2`` means ``b, b qt^2, ...`` (``qt^2 = q^-2``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .lweights import Spec

STEP_Q = 2
STEP_QT = -2


@dataclass(frozen=True, order=True)
class QString:
    """``X_a X_{a t^2} ... X_{a t^{2l-2}}`` with ``t = q`` (step 2) or ``qt`` (step -2)."""

    start: Spec
    len: int
    step: int = STEP_Q

    def __post_init__(self):
        if self.len < 1:
            raise ValueError("string length must be positive")
        if self.step not in (STEP_Q, STEP_QT):
            raise ValueError("step must be 2 (q lattice) or -2 (qt lattice)")

    def elements(self) -> List[Spec]:
        return [self.start.mul_q(self.step * k) for k in range(self.len)]

    def end_next(self) -> Spec:
        """The parameter that would extend the string at its far end."""
        return self.start.mul_q(self.step * self.len)

    def lift(self, t: int = 1) -> Spec:
        """``a * t^{2l - 2t + 1}``, the t-th ladder lift (t = 1 is the top one)."""
        k = 2 * self.len - 2 * t + 1
        return self.start.mul_q(k) if self.step == STEP_Q else self.start.mul_qt(k)

    def center(self) -> Spec:
        k = self.len - 1
        return self.start.mul_q(k) if self.step == STEP_Q else self.start.mul_qt(k)


@dataclass(frozen=True)
class SKac:
    """The rational l-weight ``S_{i,j}(a)``."""

    i: int
    j: int
    a: Spec

    @classmethod
    def of_string(cls, s: QString) -> "SKac":
        if s.step == STEP_Q:
            return cls(s.len, 0, s.center())
        return cls(0, -s.len, s.center())


def _pos(s: Spec, step: int) -> int:
    """Position along the lattice direction."""
    return s.exp * (1 if step > 0 else -1)


def _line(s: Spec) -> Tuple[int, int, int]:
    """Lattice coset of a parameter: strings only ever join within one."""
    return (s.orbit, s.sign, s.exp % 2)


def _greedy(exps: Mapping[Spec, int], step: int, high_first: bool = False) -> List[QString]:
    """Maximal strings, built from the lowest (or highest) available parameter."""
    pool = Counter({a: e for a, e in exps.items() if e})
    out: List[QString] = []
    while pool:
        if high_first:
            top = max(pool, key=lambda a: (_line(a), _pos(a, step)))
            cur = top
            length = 0
            while pool.get(cur, 0) > 0:
                pool[cur] -= 1
                if not pool[cur]:
                    del pool[cur]
                length += 1
                cur = cur.mul_q(-step)
            out.append(QString(cur.mul_q(step), length, step))
        else:
            start = min(pool, key=lambda a: (_line(a), _pos(a, step)))
            cur, length = start, 0
            while pool.get(cur, 0) > 0:
                pool[cur] -= 1
                if not pool[cur]:
                    del pool[cur]
                length += 1
                cur = cur.mul_q(step)
            out.append(QString(start, length, step))
    out.sort(key=_string_key)
    return out


def _string_key(s: QString):
    return (s.step, s.start.sort_key(), s.len)


# --- even node ---------------------------------------------------------------

def sl2_special(s1: QString, s2: QString) -> bool:
    """Special position: the union is a string properly containing both."""
    if s1.step != s2.step or _line(s1.start) != _line(s2.start):
        return False
    lo1, lo2 = _pos(s1.start, s1.step), _pos(s2.start, s2.step)
    hi1, hi2 = lo1 + 2 * (s1.len - 1), lo2 + 2 * (s2.len - 1)
    if max(lo1, lo2) > min(hi1, hi2) + 2:
        return False
    lo, hi = min(lo1, lo2), max(hi1, hi2)
    return (lo, hi) != (lo1, hi1) and (lo, hi) != (lo2, hi2)


def sl2_decompose(exps: Mapping[Spec, int], step: int = STEP_Q) -> List[QString]:
    """Strings in pairwise general position whose product is ``exps``."""
    for a, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent at {a}: the monomial is not dominant")
    return _greedy(exps, step)


@dataclass
class Rank1Char:
    """``base * sum_k c_k prod_{b in lifts_k} A^-1_b`` with lifts as sorted tuples."""

    base: object
    terms: List[Tuple[int, Tuple[Spec, ...]]] = field(default_factory=list)

    def dimension(self) -> int:
        return sum(c for c, _ in self.terms)

    def as_dict(self) -> Dict[Tuple[Spec, ...], int]:
        return {lifts: c for c, lifts in self.terms}


def _lift_key(lifts: Iterable[Spec]) -> Tuple[Spec, ...]:
    return tuple(sorted(lifts, key=Spec.sort_key))


def _convolve(factors: Sequence[Sequence[Tuple[Spec, ...]]]) -> List[Tuple[int, Tuple[Spec, ...]]]:
    acc: Dict[Tuple[Spec, ...], int] = {(): 1}
    for options in factors:
        nxt: Dict[Tuple[Spec, ...], int] = {}
        for lifts, c in acc.items():
            for opt in options:
                key = _lift_key(lifts + opt)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return sorted(((c, k) for k, c in acc.items()), key=lambda ck: (len(ck[1]), [s.sort_key() for s in ck[1]]))


def sl2_simple_qchar(strings: Sequence[QString], base=None) -> Rank1Char:
    factors = []
    for s in strings:
        ladder = [tuple(s.lift(t) for t in range(1, k + 1)) for k in range(s.len + 1)]
        factors.append(ladder)
    return Rank1Char(base, _convolve(factors))


# --- odd node ----------------------------------------------------------------

@dataclass(frozen=True)
class U01Normal:
    """``Dbar^{-s} * prod(ystrings) * prod(ytstrings)``."""

    s: int
    ystrings: Tuple[QString, ...]
    ytstrings: Tuple[QString, ...]

    def strings(self) -> Tuple[QString, ...]:
        return self.ystrings + self.ytstrings

    def exps(self) -> Tuple[Dict[Spec, int], Dict[Spec, int], int]:
        """Back to ``(Y exponents, Yt exponents, D exponent)``."""
        ye: Dict[Spec, int] = {}
        te: Dict[Spec, int] = {}
        for s in self.ystrings:
            for a in s.elements():
                ye[a] = ye.get(a, 0) + 1
        for s in self.ytstrings:
            for a in s.elements():
                te[a] = te.get(a, 0) + 1
        return ye, te, -self.s


def u01_adjacent(s1: QString, s2: QString) -> bool:
    """Special position for U(01) strings of one type: exact concatenability."""
    return s1.step == s2.step and (s1.end_next() == s2.start or s2.end_next() == s1.start)


def u01_normal_form(yexps: Mapping[Spec, int], ytexps: Optional[Mapping[Spec, int]] = None,
                    dexp: int = 0, high_first: bool = False) -> U01Normal:
    ys: Counter = Counter()
    ts: Counter = Counter()
    t = dexp
    for a, e in yexps.items():
        if e > 0:
            ys[a] += e
        elif e < 0:
            ts[a.neg()] += -e
            t += e
    for b, e in (ytexps or {}).items():
        if e > 0:
            ts[b] += e
        elif e < 0:
            ys[b.neg()] += -e
            t += e
    for a in list(ys):
        k = min(ys[a], ts.get(a.neg(), 0))
        if k:
            ys[a] -= k
            ts[a.neg()] -= k
            t += k
    ys = +ys
    ts = +ts
    return U01Normal(-t, tuple(_greedy(ys, STEP_Q, high_first)), tuple(_greedy(ts, STEP_QT, high_first)))


def u01_qchar(yexps: Mapping[Spec, int], ytexps: Optional[Mapping[Spec, int]] = None,
              dexp: int = 0, base=None, high_first: bool = False) -> Rank1Char:
    nf = u01_normal_form(yexps, ytexps, dexp, high_first)
    factors = [[(), (s.lift(1),)] for s in nf.strings()]
    return Rank1Char(base, _convolve(factors))


def general_position(s1: SKac, s2: SKac) -> bool:
    """``a/b != (q^{i+i'} qt^{-j-j'})^{+-1}``; ``S_{1,-1}`` (= D) is always generic."""
    if (s1.i, s1.j) == (1, -1) or (s2.i, s2.j) == (1, -1):
        return True
    r = s1.a.ratio(s2.a)
    if r is None:
        return True
    jj = s1.j + s2.j
    target = ((-1) ** (jj % 2), s1.i + s2.i + jj)
    inv = (target[0], -target[1])
    return r != target and r != inv
