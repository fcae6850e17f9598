"""The l-weight monomial ring in canonical form.

Variables are ``Y[i, a]`` (``1 <= i <= M``), ``Yt[j, a]`` (``M < j < n``) and
``D``.  ``Yt[M, a]`` is never stored: it is rewritten as ``D * Y[M, -a]^-1``.
Spectral parameters live on the lattice ``+-q^k`` (with an optional orbit
tag for parameters that are algebraically unrelated to ``q``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

from .cartan import EpsilonSeq

KIND_Y, KIND_YT, KIND_D = 0, 1, 2
_KIND_NAMES = {KIND_Y: "Y", KIND_YT: "Yt", KIND_D: "D"}


class Spec(NamedTuple):
    """The scalar ``sign * q^exp`` in orbit ``orbit``."""

    orbit: int = 0
    sign: int = 1
    exp: int = 0

    @classmethod
    def q(cls, k: int, sign: int = 1, orbit: int = 0) -> "Spec":
        return cls(orbit, sign, k)

    @classmethod
    def qt(cls, k: int, sign: int = 1, orbit: int = 0) -> "Spec":
        """``sign * qt^k`` with ``qt = -q^{-1}``."""
        return cls(orbit, sign * (-1) ** (k % 2), -k)

    def mul_q(self, m: int) -> "Spec":
        return Spec(self.orbit, self.sign, self.exp + m)

    def mul_qt(self, m: int) -> "Spec":
        return Spec(self.orbit, self.sign * (-1) ** (m % 2), self.exp - m)

    def neg(self) -> "Spec":
        return Spec(self.orbit, -self.sign, self.exp)

    def ratio(self, other: "Spec") -> Optional[Tuple[int, int]]:
        """``self / other`` as ``(sign, exp)``, or None across orbits."""
        if self.orbit != other.orbit:
            return None
        return self.sign * other.sign, self.exp - other.exp

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.orbit, 0 if self.sign > 0 else 1, self.exp)

    def to_text(self) -> str:
        body = "1" if self.exp == 0 else f"q^{self.exp}"
        out = ("-" if self.sign < 0 else "") + body
        return out + (f"@{self.orbit}" if self.orbit else "")

    def __str__(self) -> str:
        return self.to_text()


ONE_SPEC = Spec()


class Var(NamedTuple):
    kind: int
    node: int
    spec: Spec

    def sort_key(self):
        return (self.kind, self.node) + self.spec.sort_key()


D_VAR = Var(KIND_D, 0, ONE_SPEC)


class Monomial:
    """Immutable exponent map ``Var -> nonzero int``."""

    __slots__ = ("_items", "_hash", "_key")

    def __init__(self, exps: Optional[Mapping[Var, int]] = None):
        items = [(v, e) for v, e in (exps or {}).items() if e]
        items.sort(key=lambda ve: ve[0].sort_key())
        self._items: Tuple[Tuple[Var, int], ...] = tuple(items)
        self._hash = hash(self._items)
        self._key = None

    @classmethod
    def one(cls) -> "Monomial":
        return _ONE

    @property
    def items(self) -> Tuple[Tuple[Var, int], ...]:
        return self._items

    def exps(self) -> Dict[Var, int]:
        return dict(self._items)

    def exponent(self, var: Var) -> int:
        for v, e in self._items:
            if v == var:
                return e
        return 0

    def is_one(self) -> bool:
        return not self._items

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other._items:
            return self
        if not self._items:
            return other
        out = dict(self._items)
        for v, e in other._items:
            out[v] = out.get(v, 0) + e
        return Monomial(out)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial({v: e * k for v, e in self._items})

    def inverse(self) -> "Monomial":
        return self ** -1

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        if self._key is None:
            self._key = tuple((v.sort_key(), e) for v, e in self._items)
        return self._key

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)})"

    def __str__(self) -> str:
        return format_monomial(self)


_ONE = Monomial()


def _M(eps: Union[EpsilonSeq, int]) -> int:
    return eps if isinstance(eps, int) else eps.M


def y(i: int, a: Spec, e: int = 1) -> Monomial:
    return Monomial({Var(KIND_Y, i, a): e})


def d(e: int = 1) -> Monomial:
    return Monomial({D_VAR: e})


def canonicalize_yt_M(M: int, a: Spec, e: int = 1) -> Monomial:
    """``Yt[M, a]^e`` rewritten as ``(D * Y[M, -a]^-1)^e``."""
    return Monomial({D_VAR: e, Var(KIND_Y, M, a.neg()): -e})


def yt(eps: Union[EpsilonSeq, int], j: int, a: Spec, e: int = 1) -> Monomial:
    M = _M(eps)
    if j == M:
        return canonicalize_yt_M(M, a, e)
    return Monomial({Var(KIND_YT, j, a): e})


def _check(eps: EpsilonSeq, i: int) -> None:
    if not 1 <= i <= eps.n - 1:
        raise IndexError(f"node {i} out of range 1..{eps.n - 1}")


@lru_cache(maxsize=None)
def a_inverse(eps: EpsilonSeq, i: int, a: Spec) -> Monomial:
    """The inverse simple l-root ``A_{i,a}^{-1}`` in canonical form."""
    _check(eps, i)
    M, n = eps.M, eps.n
    out = _ONE
    if i < M:
        out = y(i, a.mul_q(1), -1) * y(i, a.mul_q(-1), -1)
        if i > 1:
            out = out * y(i - 1, a)
        out = out * y(i + 1, a)
    elif i > M:
        out = yt(M, i, a.mul_qt(1), -1) * yt(M, i, a.mul_qt(-1), -1)
        out = out * yt(M, i - 1, a)
        if i + 1 < n:
            out = out * yt(M, i + 1, a)
    else:
        out = d(-1)
        if M > 1:
            out = out * y(M - 1, a)
        if M + 1 < n:
            out = out * yt(M, M + 1, a)
    return out


def weight(eps: EpsilonSeq, m: Monomial) -> Tuple[int, ...]:
    n, M = eps.n, eps.M
    w = [0] * n
    for v, e in m.items:
        if v.kind == KIND_Y:
            for k in range(v.node):
                w[k] += e
        elif v.kind == KIND_YT:
            for k in range(v.node, n):
                w[k] -= e
        else:
            for k in range(n):
                w[k] += e if k < M else -e
    return tuple(w)


class NotInRootLattice(ValueError):
    pass


def height_from(eps: EpsilonSeq, hw: Monomial, m: Monomial) -> Tuple[int, ...]:
    """``c`` with ``wt(hw) - wt(m) = sum_i c_i alpha_i``."""
    diff = [a - b for a, b in zip(weight(eps, hw), weight(eps, m))]
    if sum(diff):
        raise NotInRootLattice(f"weight difference {diff} is not in the root lattice")
    out, acc = [], 0
    for dk in diff[:-1]:
        acc += dk
        out.append(acc)
    return tuple(out)


def dominant_nonM(eps: EpsilonSeq, m: Monomial, i: int) -> bool:
    _check(eps, i)
    if i == eps.M:
        raise ValueError("dominance at the odd node is not defined; use the rank-1 normal form")
    kind = KIND_Y if i < eps.M else KIND_YT
    return all(e >= 0 for v, e in m.items if v.kind == kind and v.node == i)


def validate_highest(eps: EpsilonSeq, m: Monomial) -> None:
    """Raise ``ValueError`` unless ``m`` is a positive monomial in Y, Yt."""
    M = eps.M
    deficit = 0
    t = 0
    for v, e in m.items:
        if v.kind == KIND_D:
            t = e
        elif v.kind == KIND_Y and v.node == M:
            deficit += max(0, -e)
        elif e < 0:
            raise ValueError(f"highest l-weight has negative exponent at {_var_text(v)}")
        if v.kind == KIND_Y and not 1 <= v.node <= M:
            raise ValueError(f"Y node {v.node} outside 1..{M}")
        if v.kind == KIND_YT and not M < v.node < eps.n:
            raise ValueError(f"Yt node {v.node} outside {M + 1}..{eps.n - 1}")
    if t < deficit:
        raise ValueError("odd-node part is not a positive monomial in Y and Yt")


# --- text format -----------------------------------------------------------

def _var_text(v: Var) -> str:
    if v.kind == KIND_D:
        return "D"
    return f"{_KIND_NAMES[v.kind]}[{v.node},{v.spec.to_text()}]"


def _term_text(v: Var, e: int) -> str:
    return _var_text(v) + ("" if e == 1 else f"^{e}")


def format_monomial(m: Monomial, eps: Optional[EpsilonSeq] = None, style: str = "canonical") -> str:
    """Deterministic text form; ``style="tilde"`` folds ``D^+-1 Y[M]^-+1`` into ``Yt[M]``."""
    if style not in ("canonical", "tilde"):
        raise ValueError(f"unknown style {style!r}")
    if m.is_one():
        return "1"
    if style == "canonical" or eps is None:
        return " ".join(_term_text(v, e) for v, e in m.items)
    M = eps.M
    exps = m.exps()
    t = exps.pop(D_VAR, 0)
    extra: Dict[Var, int] = {}
    sgn = 1 if t > 0 else -1
    for v in sorted((v for v in exps if v.kind == KIND_Y and v.node == M), key=Var.sort_key):
        while t and exps[v] * sgn < 0:
            exps[v] += sgn
            t -= sgn
            key = Var(KIND_YT, M, v.spec.neg())
            extra[key] = extra.get(key, 0) + sgn
    if t:
        exps[D_VAR] = t
    exps.update(extra)
    items = sorted(((v, e) for v, e in exps.items() if e), key=lambda ve: ve[0].sort_key())
    return " ".join(_term_text(v, e) for v, e in items) or "1"


_TOKEN = re.compile(
    r"\s*(?:(?P<d>D)|(?P<kind>Yt|Y)\[\s*(?P<node>\d+)\s*,\s*(?P<spec>[^\]]+?)\s*\])(?:\^(?P<exp>[+-]?\d+))?"
)
_SPEC = re.compile(r"^(?P<neg>-)?(?:(?P<base>qt|q)\^(?P<k>[+-]?\d+)|(?P<one>1))(?:@(?P<orbit>\d+))?$")


def parse_spec(text: str) -> Spec:
    mt = _SPEC.match(text.strip())
    if not mt:
        raise ValueError(f"bad spectral parameter {text!r}")
    sign = -1 if mt["neg"] else 1
    orbit = int(mt["orbit"] or 0)
    if mt["one"]:
        return Spec(orbit, sign, 0)
    k = int(mt["k"])
    return Spec.q(k, sign, orbit) if mt["base"] == "q" else Spec.qt(k, sign, orbit)


def parse_monomial(text: str, eps: EpsilonSeq) -> Monomial:
    """Parse the whitespace-separated product grammar; canonicalizes ``Yt[M]``."""
    pos = 0
    out = _ONE
    text = text.rstrip()
    if text.strip() == "1":
        return out
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"syntax error at position {pos}: {text[pos:pos + 12]!r}")
        e = int(mt["exp"]) if mt["exp"] else 1
        if mt["d"]:
            out = out * d(e)
        else:
            node = int(mt["node"])
            try:
                a = parse_spec(mt["spec"])
            except ValueError as exc:
                raise ValueError(f"syntax error at position {mt.start('spec')}: {exc}") from None
            if mt["kind"] == "Y":
                if not 1 <= node <= eps.M:
                    raise ValueError(f"Y node {node} outside 1..{eps.M} at position {mt.start('node')}")
                out = out * y(node, a, e)
            else:
                if not eps.M <= node <= eps.n - 1:
                    raise ValueError(f"Yt node {node} outside {eps.M}..{eps.n - 1} at position {mt.start('node')}")
                out = out * yt(eps, node, a, e)
        pos = mt.end()
        if pos < len(text) and not text[pos].isspace():
            raise ValueError(f"syntax error at position {pos}: expected whitespace")
    return out


# --- q-characters ----------------------------------------------------------

class QChar:
    """Finite formal sum of monomials with positive multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean = {}
        for m, c in (terms or {}).items():
            if c < 0:
                raise ValueError("multiplicities must be positive")
            if c:
                clean[m] = c
        self._terms: Dict[Monomial, int] = clean

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._terms

    def mult(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def dimension(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, QChar) and self._terms == other._terms

    def __add__(self, other: "QChar") -> "QChar":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return QChar(out)

    def __mul__(self, other: Union["QChar", Monomial]) -> "QChar":
        if isinstance(other, Monomial):
            return QChar({m * other: c for m, c in self._terms.items()})
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                k = m1 * m2
                out[k] = out.get(k, 0) + c1 * c2
        return QChar(out)

    def sorted_terms(self, eps: Optional[EpsilonSeq] = None, hw: Optional[Monomial] = None) -> List[Tuple[Monomial, int]]:
        """By (height from ``hw``, serialization) if given, else serialization."""
        def key(item):
            m = item[0]
            text = format_monomial(m)
            if hw is not None and eps is not None:
                return (sum(height_from(eps, hw, m)), text)
            return (0, text)
        return sorted(self._terms.items(), key=key)

    def to_json_obj(self, eps: Optional[EpsilonSeq] = None, hw: Optional[Monomial] = None) -> dict:
        return {"terms": [{"m": format_monomial(m), "mult": c} for m, c in self.sorted_terms(eps, hw)]}

    def to_json(self, eps: Optional[EpsilonSeq] = None, hw: Optional[Monomial] = None) -> str:
        return json.dumps(self.to_json_obj(eps, hw), indent=2)

    @classmethod
    def from_json_obj(cls, obj: dict, eps: EpsilonSeq) -> "QChar":
        out: Dict[Monomial, int] = {}
        for t in obj["terms"]:
            m = parse_monomial(t["m"], eps)
            out[m] = out.get(m, 0) + int(t["mult"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str, eps: EpsilonSeq) -> "QChar":
        return cls.from_json_obj(json.loads(text), eps)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{m}]" if c > 1 else f"[{m}]" for m, c in self.sorted_terms())
        return f"QChar({body})"


def qchar_from(monomials: Iterable[Monomial]) -> QChar:
    out: Dict[Monomial, int] = {}
    for m in monomials:
        out[m] = out.get(m, 0) + 1
    return QChar(out)
