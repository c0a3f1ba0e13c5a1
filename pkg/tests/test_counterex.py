from fractions import Fraction

import pytest

from flagorbits.counterex import (DIM, S_PERM, W_PERM, Flag, alpha, basis_vector, image,
                                  is_alpha_lagrangian, nilpotent, omega, omega_matrix, perm_flag,
                                  perp, phi, unipotent, verify_noncontinuity)
from flagorbits.exactla import Matrix, span

e = basis_vector


def sp(*idx):
    return span([e(i) for i in idx], (DIM, 1))


def test_form_and_nilpotent():
    assert omega(e(1), e(8)) == 1 and omega(e(1), e(7)) == 0
    N = nilpotent()
    assert N @ e(5) == e(1) and N @ e(6) == e(2)
    assert N @ e(7) == -e(3) and N @ e(8) == -e(4)
    assert (N @ N).is_zero()


def test_other_sign_choice_is_not_skew():
    # flipping the sign on f_6 breaks compatibility with omega
    N = nilpotent() - Matrix.elementary(DIM, DIM, 1, 5).scale(2)
    om = omega_matrix()
    assert not (N.T @ om + om @ N).is_zero()


def test_unipotent_family():
    for t in (Fraction(1), Fraction(-5, 2)):
        assert unipotent(t) @ unipotent(-t) == Matrix.identity(DIM)


def test_phi_values():
    assert phi(perm_flag(W_PERM)) == sp(1, 2)
    assert phi(perm_flag(S_PERM)) == sp(1, 3)
    assert phi(perm_flag(W_PERM).transform(unipotent(Fraction(1, 2)))) == sp(1, 2)


def test_flags_n_stable():
    N = nilpotent()
    for p in (W_PERM, S_PERM):
        F = perm_flag(p)
        assert all(F[i].contains_space(image(N, F[i])) for i in range(1, DIM))


def test_phi_outputs_are_alpha_lagrangian():
    assert is_alpha_lagrangian(sp(1, 2))
    assert is_alpha_lagrangian(sp(1, 3))
    # f1 pairs with f4 under alpha (f1 = N f5, omega(f5, f4) = 1)
    assert alpha(e(1), e(4)) != 0
    assert not is_alpha_lagrangian(sp(1, 4))


def test_alpha_is_skew():
    for i in range(1, 5):
        for j in range(1, 5):
            assert alpha(e(i), e(j)) == -alpha(e(j), e(i))


def test_perp():
    assert perp(sp(1, 2)) == sp(1, 2, 3, 4, 5, 6)
    assert perp(sp()).dim == DIM


def test_bad_flag():
    with pytest.raises(ValueError):
        Flag.from_vectors([e(1), e(1)] + [e(i) for i in range(3, 9)])


def test_report():
    rep = verify_noncontinuity()
    assert rep.ok, [k for k, v in rep.checks.items() if not v]
    assert rep.checks["limit is sF"]
    d = rep.to_dict()
    assert d["ok"] and len(d["phi_wF"]) == 2
