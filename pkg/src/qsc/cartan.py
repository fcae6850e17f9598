"""Epsilon sequences and the (q, qt)-deformed Cartan matrix.

Nodes are numbered ``1..n-1`` throughout.  ``specialized_cartan`` returns
the matrix ``C(q^r, (-q^{-1})^r)`` with ``r`` symbolic, as ``SignedLaurent``
entries (``x = q^r``, ``sigma = (-1)^r``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .ring import (
    FractionSL,
    LaurentQQ,
    LaurentZ,
    Q,
    QT,
    RationalQQ,
    SIGMA,
    SignedLaurent,
    qbracket,
)

Matrix = List[List[SignedLaurent]]


@dataclass(frozen=True)
class EpsilonSeq:
    bits: Tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 2:
            raise ValueError("an epsilon sequence needs n >= 2 entries")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"epsilon entries must be 0 or 1: {self.bits}")

    @classmethod
    def standard(cls, M: int, N: int) -> "EpsilonSeq":
        if M < 0 or N < 0:
            raise ValueError("M and N must be nonnegative")
        return cls((0,) * M + (1,) * N)

    @classmethod
    def parse(cls, text: str) -> "EpsilonSeq":
        """Accepts ``"0011"``, ``"(0,0,1,1)"`` or ``"0 0 1 1"``."""
        digits = [c for c in text if c in "01"]
        if any(c not in "01(), " for c in text):
            raise ValueError(f"bad epsilon sequence {text!r}")
        return cls(tuple(int(c) for c in digits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def M(self) -> int:
        return self.bits.count(0)

    @property
    def N(self) -> int:
        return self.bits.count(1)

    @property
    def rank(self) -> int:
        return self.n - 1

    def is_standard(self) -> bool:
        return self.bits == (0,) * self.M + (1,) * self.N

    def parity(self, i: int) -> int:
        self._check_node(i)
        return (self.bits[i - 1] + self.bits[i]) % 2

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"node {i} out of range 1..{self.n - 1}")

    def __str__(self) -> str:
        return "(" + "".join(map(str, self.bits)) + ")"


class BiExp(NamedTuple):
    """``q^u * qt^v``."""

    u: int
    v: int

    def specialize(self) -> Tuple[int, int]:
        """(sign, exponent of q) under ``qt = -q^{-1}``."""
        return (-1) ** (self.v % 2), self.u - self.v


def _root(eps: EpsilonSeq, i: int) -> List[int]:
    vec = [0] * eps.n
    vec[i - 1], vec[i] = 1, -1
    return vec


def pairing_exp(eps: EpsilonSeq, i: int, j: int) -> BiExp:
    """Exponents of the bicharacter value on ``(alpha_i, alpha_j)``."""
    eps._check_node(i)
    eps._check_node(j)
    u = v = 0
    for k, (a, b) in enumerate(zip(_root(eps, i), _root(eps, j))):
        if eps.bits[k]:
            v += a * b
        else:
            u += a * b
    return BiExp(u, v)


def _qq(b: BiExp) -> LaurentQQ:
    return LaurentQQ({(b.u, b.v): 1})


def deformed_cartan(eps: EpsilonSeq) -> List[List[RationalQQ]]:
    size = eps.n - 1
    out = []
    for i in range(1, size + 1):
        qi = QT if eps.bits[i - 1] else Q
        den = qi - qi ** -1
        row = []
        for j in range(1, size + 1):
            b = pairing_exp(eps, i, j)
            num = _qq(b) - _qq(BiExp(-b.u, -b.v))
            row.append(RationalQQ(num, den))
        out.append(row)
    return out


def _sl_power(b: BiExp) -> SignedLaurent:
    """Image of ``(q^u qt^v)^r`` with ``x = q^r``, ``sigma = (-1)^r``."""
    term = LaurentZ.mono(b.u - b.v)
    return SignedLaurent(0, term) if b.v % 2 else SignedLaurent(term)


def specialized_cartan(eps: EpsilonSeq) -> Matrix:
    size = eps.n - 1
    out = []
    for i in range(1, size + 1):
        qi = BiExp(0, 1) if eps.bits[i - 1] else BiExp(1, 0)
        den = _sl_power(qi) - _sl_power(BiExp(-qi.u, -qi.v))
        row = []
        for j in range(1, size + 1):
            b = pairing_exp(eps, i, j)
            num = _sl_power(b) - _sl_power(BiExp(-b.u, -b.v))
            try:
                row.append(num.exact_div(den))
            except ArithmeticError as exc:  # pragma: no cover - type A never hits this
                raise ArithmeticError(f"entry ({i},{j}) is not a signed Laurent polynomial") from exc
        out.append(row)
    return out


def d_matrix(eps: EpsilonSeq) -> Matrix:
    """``D^r = diag((-1)^{r eps_i})`` over the nodes."""
    size = eps.n - 1
    return [[(SIGMA if eps.bits[i] else SignedLaurent(1)) if i == j else SignedLaurent(0)
             for j in range(size)] for i in range(size)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for k in range(p):
            acc = SignedLaurent(0)
            for j in range(m):
                if a[i][j] and b[j][k]:
                    acc = acc + a[i][j] * b[j][k]
            row.append(acc)
        out.append(row)
    return out


def determinant(mat: Sequence[Sequence[SignedLaurent]]) -> SignedLaurent:
    """Laplace expansion along rows, memoized on the set of used columns."""
    size = len(mat)
    memo: Dict[Tuple[int, frozenset], SignedLaurent] = {}

    def minor(row: int, cols: frozenset) -> SignedLaurent:
        if row == size:
            return SignedLaurent(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = SignedLaurent(0)
        sign = 1
        for c in range(size):
            if c in cols:
                continue
            if mat[row][c]:
                term = mat[row][c] * minor(row + 1, cols | {c})
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, frozenset())


def adjugate(mat: Sequence[Sequence[SignedLaurent]]) -> Matrix:
    size = len(mat)
    if size == 1:
        return [[SignedLaurent(1)]]
    adj = [[SignedLaurent(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            sub = [[mat[r][c] for c in range(size) if c != j] for r in range(size) if r != i]
            cof = determinant(sub)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def _check_mn(M: int, N: int) -> None:
    if M <= 0 or N <= 0:
        raise ValueError("M and N must be positive")
    if M == N:
        raise ValueError("the specialized Cartan matrix is singular when M == N")


class DetResult(NamedTuple):
    value: SignedLaurent
    matches_cofactor: bool


@lru_cache(maxsize=None)
def _cd_matrix(M: int, N: int) -> Tuple[Tuple[SignedLaurent, ...], ...]:
    eps = EpsilonSeq.standard(M, N)
    cd = mat_mul(specialized_cartan(eps), d_matrix(eps))
    return tuple(tuple(r) for r in cd)


def det_closed(M: int, N: int) -> SignedLaurent:
    return SignedLaurent(-qbracket(M - N))


def det_specialized(M: int, N: int) -> DetResult:
    """Closed-form ``det(C D)`` plus agreement with cofactor expansion."""
    _check_mn(M, N)
    value = det_closed(M, N)
    return DetResult(value, determinant(_cd_matrix(M, N)) == value)


def _br(a: int) -> SignedLaurent:
    return SignedLaurent(qbracket(a))


def _sig(k: int) -> SignedLaurent:
    return SIGMA if k % 2 else SignedLaurent(1)


def inv_entry_closed(M: int, N: int, i: int, j: int) -> SignedLaurent:
    """Entry ``(i, j)`` of ``d * D * C^{-1}`` from the case formulas."""
    _check_mn(M, N)
    n = M + N
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise IndexError(f"entry ({i},{j}) out of range for n-1 = {n - 1}")
    lo, hi = min(i, j), max(i, j)
    if j <= M:
        if i <= M:
            return -(_br(lo) * _br(M - N - hi))
        return _sig(i - M - 1) * _br(j) * _br(N - i + M)
    if i > M:
        return -(_sig(j - i) * _br(2 * M - lo) * _br(M + N - hi))
    return -(_sig(j - M - 1) * _br(i) * _br(M + N - j))


@lru_cache(maxsize=None)
def _adjugate_cd(M: int, N: int) -> Tuple[Tuple[SignedLaurent, ...], ...]:
    return tuple(tuple(r) for r in adjugate(_cd_matrix(M, N)))


def inv_entry_adjugate(M: int, N: int, i: int, j: int) -> SignedLaurent:
    """Entry ``(i, j)`` of ``adj(C D) = d * D * C^{-1}``."""
    _check_mn(M, N)
    return _adjugate_cd(M, N)[i - 1][j - 1]


def closed_matrix(M: int, N: int) -> Matrix:
    size = M + N - 1
    return [[inv_entry_closed(M, N, i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]


def p_coeff_tables(M: int, N: int, i: int, j: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    """``(p_ij, p'_ij)`` with entry ``= sum_k (p(k) + sigma p'(k)) x^k``."""
    return inv_entry_closed(M, N, i, j).coeff_tables()


def verify_inverse(M: int, N: int, max_size: int = 12) -> bool:
    """Check ``C * (D * closed / d) == Id`` as fractions over the signed ring."""
    _check_mn(M, N)
    if M + N > max_size:
        raise ValueError(f"M+N={M + N} exceeds the configured bound {max_size}")
    eps = EpsilonSeq.standard(M, N)
    c = specialized_cartan(eps)
    d = det_closed(M, N)
    dc = mat_mul(d_matrix(eps), closed_matrix(M, N))
    prod = mat_mul(c, dc)
    size = M + N - 1
    for r in range(size):
        for s in range(size):
            target = FractionSL(1 if r == s else 0)
            if not FractionSL(prod[r][s], d) == target:
                return False
    return True


def render_matrix(mat: Sequence[Sequence], fmt=None) -> str:
    fmt = fmt or (lambda e: e.render() if isinstance(e, SignedLaurent) else e.to_str())
    cells = [[fmt(e) for e in row] for row in mat]
    width = max((len(c) for row in cells for c in row), default=0)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)
