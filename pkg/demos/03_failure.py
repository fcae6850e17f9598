"""
When the algorithm fails
========================

For U(001) the FM procedure succeeds on Y[1,1] Yt[2,-q^-1] but not on
Y[1,1] Yt[2,-q]: the lowest term reached has a non-dominant restriction
to node 1.
"""

from qsc import fm
from qsc.cartan import EpsilonSeq
from qsc.lweights import format_monomial, parse_monomial
from qsc.restriction import beta

eps = EpsilonSeq.standard(2, 1)

for text in ("Y[1,1] Yt[2,-q^-1]", "Y[1,1] Yt[2,-q^1]"):
    hw = parse_monomial(text, eps)
    res = fm.run(eps, hw)
    print(f"{text}: {res.status} with {len(res.qchar)} terms")
    for m, c in res.sorted_terms():
        print(f"  {c} x {format_monomial(m, eps, 'tilde')}")
    if res.status == fm.FAILED:
        at = res.failed_at
        print("  stuck at", format_monomial(at, eps, "tilde"), "in direction", res.failed_direction)
        print("  its node-1 part", format_monomial(beta(eps, [res.failed_direction], at)), "is not dominant")
    print()
