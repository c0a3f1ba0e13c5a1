import itertools

import pytest
from hypothesis import given, strategies as st

from flagorbits.weyl import (ModelSpec, NotInWeylGroupError, Perm, bruhat_leq, check_of,
                             coset_decompose, coxeter_length, enumerate_minimal_reps,
                             in_parabolic, in_weyl, induced_perm, inversions,
                             longest_element, parabolic_subgroup, theta_on_WP, type_length,
                             u0, weyl_group)
from flagorbits.models import perm_matrix

P = Perm.parse


def perms(m):
    return st.permutations(range(1, m + 1)).map(lambda t: Perm(tuple(t)))


def test_parse_and_str():
    assert str(P("3 1 4 2 5")) == "3 1 4 2 5"
    assert P("[3,1,2]") == P("3 1 2")
    with pytest.raises(ValueError):
        P("1 1 2")


def test_composition_convention():
    s, p = P("2 1 3"), P("1 3 2")
    assert (s * p)(1) == s(p(1))
    assert perm_matrix(s * p) == perm_matrix(s) @ perm_matrix(p)


@pytest.mark.parametrize("p,n", [("3 1 4 2 5", 3), ("1 2 3", 0), ("4 3 2 1", 6)])
def test_inversions(p, n):
    assert inversions(P(p)) == n


def test_check_of_examples():
    assert check_of(P("2 1 3")) == P("1 3 2")
    assert check_of(P("5 4 3 2 1")) == P("5 4 3 2 1")


@given(perms(6))
def test_check_of_is_involution_and_delta_inverse(p):
    assert check_of(check_of(p)) == p
    assert perm_matrix(check_of(p)) == perm_matrix(p).delta().inverse()


@given(perms(5), perms(5))
def test_check_of_multiplicative(p, q):
    assert check_of(p * q) == check_of(p) * check_of(q)


def test_membership_examples():
    assert in_weyl(P("4 3 2 1"), (1, 4))
    assert in_weyl(P("3 4 1 2"), (-1, 4))
    assert not in_weyl(P("4 2 3 1"), (1, 4))  # odd number of sign changes
    assert in_weyl(P("4 2 3 1"), (-1, 4))


@pytest.mark.parametrize("p,raw,want", [
    ("3 2 1", (1, 3), 1),
    ("6 5 3 4 2 1", (1, 6), 6),
    ("4 3 2 1", (1, 4), 2),
    ("2 1", (-1, 2), 1),
])
def test_type_length_examples(p, raw, want):
    assert type_length(P(p), raw) == want
    assert coxeter_length(P(p), raw) == want


def test_type_length_rejects_non_members():
    with pytest.raises(NotInWeylGroupError):
        type_length(P("2 1 3 4"), (1, 4))


@pytest.mark.parametrize("raw,size", [((0, 4), 24), ((1, 5), 8), ((-1, 6), 48),
                                      ((1, 6), 24), ((1, 8), 192), ((1, 7), 48)])
def test_group_orders(raw, size):
    W = weyl_group(raw)
    assert len(W) == size == len(set(W))
    assert list(W) == sorted(W)


def test_longest_elements():
    assert longest_element((0, 5)) == P("5 4 3 2 1")
    assert longest_element((1, 6)) == P("6 5 3 4 2 1")
    assert u0(ModelSpec("A", 5, 2)) == Perm.identity(1)
    for raw in [(1, 5), (-1, 6), (1, 8)]:
        w0 = longest_element(raw)
        assert in_weyl(w0, raw)
        assert type_length(w0, raw) == max(type_length(x, raw) for x in weyl_group(raw))


@pytest.mark.parametrize("args", [("B", 4, 0), ("C", 6, 2), ("D", 6, 1), ("A", 4, 3), ("E", 4, 1)])
def test_bad_specs(args):
    with pytest.raises(ValueError):
        ModelSpec(*args)


def test_coset_examples():
    s = ModelSpec("A", 5, 2)
    w = P("3 1 4 2 5")
    assert coset_decompose(w, s) == (Perm.identity(5), w)
    assert coset_decompose(P("1 2 3 5 4"), s) == (P("1 2 3 5 4"), Perm.identity(5))
    assert theta_on_WP(P("1 2 3 5 4"), s) == P("2 1 3 4 5")


@pytest.mark.parametrize("spec", [ModelSpec("A", 5, 2), ModelSpec("D", 6, 2),
                                  ModelSpec("B", 7, 2), ModelSpec("C", 6, 1)])
def test_coset_lengths_add(spec):
    for w in weyl_group(spec):
        tau, nu = coset_decompose(w, spec)
        assert tau * nu == w
        assert in_parabolic(tau, spec)
        assert type_length(w, spec) == type_length(tau, spec) + type_length(nu, spec)


@pytest.mark.parametrize("spec", [ModelSpec("A", 5, 2), ModelSpec("B", 7, 2), ModelSpec("C", 8, 1),
                                  ModelSpec("D", 8, 2), ModelSpec("D", 6, 0), ModelSpec("B", 5, 0)])
def test_minimal_reps_are_shortest(spec):
    # independent oracle: the unique shortest element of each coset u W_P
    WP = parabolic_subgroup(spec)
    reps = set()
    for u in weyl_group(spec):
        reps.add(min((u * x for x in WP), key=lambda y: type_length(y, spec)))
    assert reps == set(enumerate_minimal_reps(spec))
    assert len(reps) * len(WP) == len(weyl_group(spec))


def test_theta_is_involution():
    for spec in [ModelSpec("A", 5, 2), ModelSpec("D", 8, 2)]:
        for t in parabolic_subgroup(spec):
            assert theta_on_WP(theta_on_WP(t, spec), spec) == t


def test_induced_perm():
    assert induced_perm(P("3 1 4 2"), 1, 2) == Perm.identity(2)
    assert induced_perm(P("3 1 4 2"), 0, 4) == P("3 1 4 2")
    assert induced_perm(P("5 2 9 1 3 4 6 7 8"), 0, 3) == P("2 1 3")


@given(perms(7), st.integers(0, 6), st.integers(1, 7))
def test_induced_perm_sorts_window(p, k, m):
    if k + m > 7:
        return
    u = induced_perm(p, k, m)
    # p o diag(1_k, u^-1, 1) is increasing on the window
    ext = Perm(tuple(range(1, k + 1)) + tuple(k + x for x in u.inverse().images)
               + tuple(range(k + m + 1, 8)))
    vals = [(p * ext)(i) for i in range(k + 1, k + m + 1)]
    assert vals == sorted(vals)


def test_bruhat_examples():
    assert bruhat_leq(P("2 1 3"), P("3 1 2"), (0, 3))
    assert not bruhat_leq(P("2 1 3"), P("1 3 2"), (0, 3))
    w0 = longest_element((0, 4))
    for w in weyl_group((0, 4)):
        assert bruhat_leq(Perm.identity(4), w, (0, 4))
        assert bruhat_leq(w, w0, (0, 4))


def _tableau_criterion(u, w):
    # type A: u <= w iff sorted prefixes of u are dominated by those of w
    m = u.m
    for k in range(1, m + 1):
        a, b = sorted(u.images[:k]), sorted(w.images[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def test_bruhat_matches_tableau_criterion_s4():
    W = weyl_group((0, 4))
    for u, w in itertools.product(W, W):
        assert bruhat_leq(u, w, (0, 4)) == _tableau_criterion(u, w)


def test_bruhat_subgroup_compatible_b3():
    raw = (1, 7)
    W = weyl_group(raw)
    for u, w in itertools.product(W, W):
        if bruhat_leq(u, w, raw):
            assert type_length(u, raw) <= type_length(w, raw)
            # B_n Bruhat order is the restriction of the S_{2n+1} order
            assert _tableau_criterion(u, w)
