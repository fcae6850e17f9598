"""
Running the super FM algorithm
==============================

Compute a few q-characters, print them in both display styles, and write
the FM graph as DOT.
"""

import pathlib
import tempfile

from qsc import fm
from qsc.cartan import EpsilonSeq
from qsc.lweights import format_monomial, parse_monomial

eps = EpsilonSeq.standard(3, 2)
hw = parse_monomial("Y[1,1]", eps)
res = fm.run(eps, hw)
print(f"L(Y[1,1]) over 000|11: {res.status}, dimension {res.qchar.dimension()}")
for m, c in res.sorted_terms():
    print(f"  {c} x {format_monomial(m, eps, 'tilde')}")
for e in res.sorted_edges():
    print(f"  edge {e.i},{e.a}: {format_monomial(e.src)} -> {format_monomial(e.dst)}")
print()

# A module whose restriction to node 3 is not a single string.
eps31 = EpsilonSeq.standard(3, 1)
res = fm.run(eps31, parse_monomial("Y[3,1]", eps31))
print(f"L(Y[3,1]) over 000|1: {len(res.qchar)} terms")
for m, c in res.sorted_terms():
    print("  canonical:", format_monomial(m), "  tilde:", format_monomial(m, eps31, "tilde"))

out = pathlib.Path(tempfile.gettempdir()) / "qsc_Y31.dot"
out.write_text(fm.to_dot(res, "tilde"), encoding="utf-8")
print("DOT written to", out)
print()

# Fundamental modules: dimensions are super exterior powers.
for M, N in [(2, 1), (1, 2), (3, 2)]:
    e = EpsilonSeq.standard(M, N)
    dims = [fm.run(e, parse_monomial(f"Y[{i},1]", e)).qchar.dimension() for i in range(1, M + 1)]
    print(f"({M}|{N}) fundamental dimensions:", dims)
