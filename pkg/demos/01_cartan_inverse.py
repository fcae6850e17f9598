"""
Deformed Cartan matrices and their inverses
===========================================

Build C(q, qt) for a few parity sequences, specialize to qt = -q^-1, and
check the closed-form inverse against the adjugate.
"""

from qsc.cartan import (
    EpsilonSeq,
    closed_matrix,
    deformed_cartan,
    det_specialized,
    render_matrix,
    specialized_cartan,
    verify_inverse,
)

# Two independent parameters q and qt; entries are unreduced fractions.
for text in ("101", "0011", "1110"):
    eps = EpsilonSeq.parse(text)
    print(f"C(q, qt) for eps = {text}")
    print(render_matrix(deformed_cartan(eps)))
    print()

# After qt = -q^-1, every entry is P + (-1)^r P' with x = q^r.
eps = EpsilonSeq.standard(2, 3)
print("C(q^r, (-q^-1)^r) for 00111")
print(render_matrix(specialized_cartan(eps)))
print()

det = det_specialized(2, 3)
print("det(C D) =", det.value.render(), "(cofactor agrees)" if det.matches_cofactor else "(MISMATCH)")
print("d D C^-1 =")
print(render_matrix(closed_matrix(2, 3)))
print()

# The closed form is checked symbolically: (C D) * closed == d * Id.
for M, N in [(2, 1), (1, 2), (3, 2), (4, 3)]:
    print(f"inverse identity for ({M},{N}):", verify_inverse(M, N))
