"""Exact arithmetic kernels.

``LaurentZ`` is an integer Laurent polynomial in one formal variable ``x``.
``SignedLaurent`` is an element ``P + sigma*P'`` of ``Z[x^{+-1}] + Z[x^{+-1}]*sigma``
with ``sigma**2 == 1``; reading ``x = q**r`` and ``sigma = (-1)**r`` it encodes
expressions that are symbolic in an integer ``r``.  ``FractionSL`` is an
unreduced fraction over ``SignedLaurent``.  ``LaurentQQ``/``RationalQQ`` are
the two-variable (``q``, ``qt``) analogues used for the deformed Cartan matrix.

Everything is immutable and uses Python integers only.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple, Union

IntLike = Union[int, "LaurentZ"]


def _clean(coeffs: Mapping) -> Dict:
    return {k: c for k, c in coeffs.items() if c}


class LaurentZ:
    """Sparse integer Laurent polynomial ``sum c_k x^k``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c: Dict[int, int] = _clean(coeffs or {})
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentZ":
        return cls({0: c})

    @classmethod
    def mono(cls, k: int, c: int = 1) -> "LaurentZ":
        return cls({k: c})

    @classmethod
    def _coerce(cls, other) -> "LaurentZ":
        if isinstance(other, LaurentZ):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self) -> list:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __add__(self, other):
        other = LaurentZ._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return LaurentZ(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentZ":
        return LaurentZ({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = LaurentZ._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentZ._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for k1, c1 in self._c.items():
            for k2, c2 in other._c.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentZ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentZ":
        if e < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials can be raised to a negative power")
            (k, c), = self._c.items()
            return LaurentZ({k * e: c ** abs(e)})
        out = LaurentZ.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = LaurentZ._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def shift(self, k: int) -> "LaurentZ":
        """Multiply by ``x**k``."""
        return LaurentZ({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentZ":
        """Substitute ``x -> x**-1``."""
        return LaurentZ({-e: c for e, c in self._c.items()})

    def subs_power(self, r: int) -> "LaurentZ":
        """Substitute ``x -> x**r``."""
        out: Dict[int, int] = {}
        for e, c in self._c.items():
            out[e * r] = out.get(e * r, 0) + c
        return LaurentZ(out)

    def exact_div(self, other: "LaurentZ") -> "LaurentZ":
        """Quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        other = LaurentZ._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return LaurentZ()
        lo_b, hi_b = other.min_exp(), other.max_exp()
        lead = other._c[hi_b]
        rem = dict(self._c)
        quot: Dict[int, int] = {}
        floor = self.min_exp() - lo_b
        while rem:
            hi = max(rem)
            if hi - hi_b < floor:
                raise ArithmeticError("Laurent division is not exact")
            c = rem[hi]
            if c % lead:
                raise ArithmeticError("Laurent division is not exact")
            qc = c // lead
            shift = hi - hi_b
            quot[shift] = quot.get(shift, 0) + qc
            for k, bc in other._c.items():
                v = rem.get(k + shift, 0) - qc * bc
                if v:
                    rem[k + shift] = v
                else:
                    rem.pop(k + shift, None)
        return LaurentZ(quot)

    def to_str(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in sorted(self._c.items(), reverse=True):
            if k == 0:
                body = str(abs(c))
            else:
                pw = var if k == 1 else f"{var}^{k}"
                body = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentZ({self.to_str()})"


X = LaurentZ.mono(1)
ONE = LaurentZ.const(1)


def quantum_int(m: int) -> LaurentZ:
    """``[m]_x = x^{m-1} + x^{m-3} + ... + x^{1-m}`` for ``m >= 0``."""
    if m < 0:
        raise ValueError(f"quantum integer needs m >= 0, got {m}")
    return LaurentZ({m - 1 - 2 * k: 1 for k in range(m)})


def qbracket(a: int) -> LaurentZ:
    """``(x^a - x^-a) / (x - x^-1)`` for any integer ``a``."""
    return quantum_int(a) if a >= 0 else -quantum_int(-a)


class SignedLaurent:
    """``even + sigma*odd`` with ``sigma**2 == 1``."""

    __slots__ = ("even", "odd", "_hash")

    def __init__(self, even: IntLike = 0, odd: IntLike = 0):
        self.even = LaurentZ._coerce(even)
        self.odd = LaurentZ._coerce(odd)
        self._hash = None

    @classmethod
    def _coerce(cls, other) -> "SignedLaurent":
        if isinstance(other, SignedLaurent):
            return other
        if isinstance(other, (int, LaurentZ)):
            return cls(other, 0)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = SignedLaurent._coerce(other)
        if other is NotImplemented:
            return other
        return SignedLaurent(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self) -> "SignedLaurent":
        return SignedLaurent(-self.even, -self.odd)

    def __sub__(self, other):
        other = SignedLaurent._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = SignedLaurent._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.even, self.odd, other.even, other.odd
        return SignedLaurent(a * c + b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SignedLaurent":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = SignedLaurent(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = SignedLaurent._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.even, self.odd))
        return self._hash

    def components(self) -> Tuple[LaurentZ, LaurentZ]:
        """Images under ``sigma -> +1`` and ``sigma -> -1``."""
        return self.even + self.odd, self.even - self.odd

    @classmethod
    def from_components(cls, plus: LaurentZ, minus: LaurentZ) -> "SignedLaurent":
        s, d = plus + minus, plus - minus
        if any(c % 2 for c in s.coeffs.values()) or any(c % 2 for c in d.coeffs.values()):
            raise ArithmeticError("components do not lift to an integral SignedLaurent")
        return cls(LaurentZ({k: c // 2 for k, c in s.coeffs.items()}),
                   LaurentZ({k: c // 2 for k, c in d.coeffs.items()}))

    def is_zero_divisor(self) -> bool:
        """True iff ``even**2 == odd**2``, i.e. one component vanishes."""
        plus, minus = self.components()
        return not plus or not minus

    def exact_div(self, other: "SignedLaurent") -> "SignedLaurent":
        other = SignedLaurent._coerce(other)
        if other.is_zero_divisor():
            raise ZeroDivisionError("division by a zero divisor of the signed ring")
        p1, m1 = self.components()
        p2, m2 = other.components()
        return SignedLaurent.from_components(p1.exact_div(p2), m1.exact_div(m2))

    def bar(self) -> "SignedLaurent":
        return SignedLaurent(self.even.bar(), self.odd.bar())

    def at(self, r: int) -> LaurentZ:
        """Evaluate at a concrete ``r``: polynomial in ``q``."""
        sign = -1 if r % 2 else 1
        return self.even.subs_power(r) + sign * self.odd.subs_power(r)

    def coeff_tables(self) -> Tuple[Dict[int, int], Dict[int, int]]:
        """``(p, p')`` with ``self == sum_k (p(k) + sigma p'(k)) x^k``."""
        return self.even.coeffs, self.odd.coeffs

    def render(self) -> str:
        """Text such as ``q^r + q^-r`` or ``-(-1)^r*(q^r + q^-r)``."""
        def poly(p: LaurentZ) -> str:
            if not p:
                return "0"
            parts = []
            for k, c in sorted(p.coeffs.items(), reverse=True):
                if k == 0:
                    body = str(abs(c))
                else:
                    pw = "q^r" if k == 1 else f"q^{k}r" if k > 0 else ("q^-r" if k == -1 else f"q^{k}r")
                    body = pw if abs(c) == 1 else f"{abs(c)}*{pw}"
                parts.append(("-" if c < 0 else "+", body))
            out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                out += f" {sign} {body}"
            return out

        if self.is_zero():
            return "0"
        chunks = []
        if self.even:
            chunks.append(poly(self.even))
        if self.odd:
            o = self.odd
            if len(o.coeffs) == 1 and 0 in o.coeffs:
                c = o.coeffs[0]
                text = "(-1)^r" if abs(c) == 1 else f"{abs(c)}*(-1)^r"
                text = ("-" if c < 0 else "") + text
            else:
                text = f"(-1)^r*({poly(o)})"
            chunks.append(text)
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out

    def __repr__(self) -> str:
        return f"SignedLaurent({self.render()})"


SIGMA = SignedLaurent(0, 1)
SX = SignedLaurent(X)


class FractionSL:
    """Unreduced fraction ``num/den`` over ``SignedLaurent``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = SignedLaurent._coerce(num)
        self.den = SignedLaurent._coerce(den)
        if self.den.is_zero():
            raise ZeroDivisionError("FractionSL with zero denominator")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FractionSL):
            other = FractionSL(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is cross-multiplicative, no canonical form

    def __add__(self, other):
        if not isinstance(other, FractionSL):
            other = FractionSL(other)
        return FractionSL(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FractionSL(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, FractionSL) else FractionSL(-SignedLaurent._coerce(other)))

    def __mul__(self, other):
        if not isinstance(other, FractionSL):
            other = FractionSL(other)
        return FractionSL(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"FractionSL(({self.num.render()}) / ({self.den.render()}))"


def fraction_eq(a: FractionSL, b: FractionSL) -> bool:
    return a == b


class LaurentQQ:
    """Sparse integer Laurent polynomial in independent ``q`` and ``qt``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], int] | None = None):
        self._c = _clean(coeffs or {})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, LaurentQQ):
            return other
        if isinstance(other, int):
            return cls({(0, 0): other})
        return NotImplemented

    @property
    def coeffs(self) -> Dict[Tuple[int, int], int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other):
        other = LaurentQQ._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return LaurentQQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQQ({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        other = LaurentQQ._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = LaurentQQ._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self._c.items():
            for (a2, b2), c2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentQQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials can be raised to a negative power")
            ((a, b), c), = self._c.items()
            return LaurentQQ({(a * e, b * e): c ** abs(e)})
        out = LaurentQQ({(0, 0): 1})
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        return RationalQQ(self, other)

    def __rtruediv__(self, other):
        return RationalQQ(other, self)

    def __eq__(self, other):
        other = LaurentQQ._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def specialize(self) -> LaurentZ:
        """Substitute ``qt -> -q^{-1}``."""
        out: Dict[int, int] = {}
        for (a, b), c in self._c.items():
            out[a - b] = out.get(a - b, 0) + c * (-1) ** (b % 2)
        return LaurentZ(out)

    def specialize_r(self) -> SignedLaurent:
        """Substitute ``q -> x``, ``qt -> sigma*x^{-1}`` (i.e. ``(-q^{-1})^r``)."""
        even: Dict[int, int] = {}
        odd: Dict[int, int] = {}
        for (a, b), c in self._c.items():
            tgt = odd if b % 2 else even
            tgt[a - b] = tgt.get(a - b, 0) + c
        return SignedLaurent(LaurentZ(even), LaurentZ(odd))

    def to_str(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for (a, b), c in sorted(self._c.items(), reverse=True):
            fac = []
            if a:
                fac.append("q" if a == 1 else f"q^{a}")
            if b:
                fac.append("qt" if b == 1 else f"qt^{b}")
            body = "*".join(fac) if fac else "1"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}" if fac else str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentQQ({self.to_str()})"


Q = LaurentQQ({(1, 0): 1})
QT = LaurentQQ({(0, 1): 1})


class RationalQQ:
    """Unreduced fraction of ``LaurentQQ``; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = LaurentQQ._coerce(num)
        self.den = LaurentQQ._coerce(den)
        if not self.den:
            raise ZeroDivisionError("RationalQQ with zero denominator")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalQQ):
            other = RationalQQ(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __neg__(self):
        return RationalQQ(-self.num, self.den)

    def __mul__(self, other):
        if not isinstance(other, RationalQQ):
            other = RationalQQ(other)
        return RationalQQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, RationalQQ):
            other = RationalQQ(other)
        return RationalQQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def specialize_r(self) -> SignedLaurent:
        """The entry of ``C(q^r, (-q^{-1})^r)``; must divide exactly."""
        return self.num.specialize_r().exact_div(self.den.specialize_r())

    def to_str(self) -> str:
        if self.den == 1:
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"

    def __repr__(self):
        return f"RationalQQ({self.to_str()})"


def sum_all(items: Iterable, start=None):
    """Plain sum that works for any of the ring types above."""
    total = start
    for it in items:
        total = it if total is None else total + it
    return 0 if total is None else total
