"""
Restricting a q-character to one node
=====================================

tau_J sorts the terms of a q-character into blocks labelled by auxiliary
Z-monomials.  Each block should be the character of a rank-1 module.
"""

from qsc import fm
from qsc.cartan import EpsilonSeq
from qsc.lweights import Spec, format_monomial, parse_monomial, y, yt
from qsc.lweights import Monomial
from qsc.restriction import RestrictedMonomial, decompose_rank1, group_by_z, tau

eps = EpsilonSeq.standard(3, 2)
chi = fm.run(eps, parse_monomial("Y[1,1]", eps)).qchar

for j in (1, 3):
    print(f"tau_{{{j}}} of chi_q(L(Y[1,1])):")
    for block, z in group_by_z(eps, [j], chi):
        ztext = RestrictedMonomial(Monomial(), dict(z)).z_text()
        terms = " + ".join(format_monomial(m) for m in block)
        tops = decompose_rank1(eps, j, block)
        print(f"  {ztext}:  {terms}   highest: {[format_monomial(m) for m, _ in tops]}")
    print()

# Y[M-1,a] Yt[M+1,a] is invisible to tau_{M}.
for k in range(3):
    a = Spec.q(k)
    r = tau(eps, [3], y(2, a) * yt(eps, 4, a))
    print(f"tau_{{3}}(Y[2,{a}] Yt[4,{a}]) has inner {format_monomial(r.inner)} and Z part {r.z_text()}")
