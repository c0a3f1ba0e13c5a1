"""Print the non-continuity example: phi along U(t) w F and at its limit s F."""

from fractions import Fraction

from flagorbits.counterex import (S_PERM, W_PERM, perm_flag, phi, unipotent,
                                  verify_noncontinuity)


def show(space):
    return ", ".join("(" + " ".join(str(x) for x in b.entries) + ")" for b in space.basis)


wF = perm_flag(W_PERM)
for t in (Fraction(1), Fraction(10), Fraction(1000)):
    print(f"t={t}: phi(U(t) w F) = span{{{show(phi(wF.transform(unipotent(t))))}}}")
print(f"limit s F: phi = span{{{show(phi(perm_flag(S_PERM)))}}}")
print("all checks pass:", verify_noncontinuity().ok)
