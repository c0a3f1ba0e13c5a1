import itertools
import random

import pytest
from hypothesis import given, strategies as st

from flagorbits.exactla import Matrix
from flagorbits.models import perm_matrix
from flagorbits.orbits import (OrbitParam, bruhat_cell, classify_orbit_u, conjugator_to_w0,
                               count_orbits, enumerate_WP, hook_component_count, hook_factor,
                               involution_count, involutions, middle_induced, orbit_params,
                               orbit_stats, t_fixed_rep)
from flagorbits.weyl import (ModelSpec, Perm, in_weyl, parabolic_subgroup, sigma0, weyl_group)

P = Perm.parse


@pytest.mark.parametrize("spec,size", [(ModelSpec("A", 5, 2), 30), (ModelSpec("A", 4, 1), 12),
                                       (ModelSpec("A", 4, 0), 1)])
def test_wp_sizes(spec, size):
    reps = enumerate_WP(spec)
    assert len(reps) == size
    assert list(reps) == sorted(reps)


@pytest.mark.parametrize("n", range(2, 9))
def test_wp_index(n):
    for r in range(n // 2 + 1):
        for fam in "ABCD":
            try:
                spec = ModelSpec(fam, n, r)
            except ValueError:
                continue
            W = weyl_group(spec)
            assert len(enumerate_WP(spec)) * len(parabolic_subgroup(spec)) == len(W)
            assert all(in_weyl(v, spec) for v in enumerate_WP(spec))


@pytest.mark.parametrize("spec,count", [(ModelSpec("A", 4, 1), 12), (ModelSpec("A", 5, 2), 60),
                                        (ModelSpec("A", 6, 2), 180)])
def test_counts(spec, count):
    assert count_orbits(spec) == count == len(orbit_params(spec))


@pytest.mark.parametrize("nr,c", [((4, 1), 3), ((5, 2), 5), ((6, 2), 9), ((6, 3), 5), ((7, 0), 1)])
def test_hook_counts(nr, c):
    assert hook_component_count(*nr) == c


def _brute_syt(n, r):
    # fill the shape (2^r, 1^(n-2r)) cell by cell
    rows = [2] * r + [1] * (n - 2 * r)
    cells = [(i, j) for i, l in enumerate(rows) for j in range(l)]
    count = 0
    for order in itertools.permutations(range(len(cells))):
        val = dict(zip(cells, order))
        if all(val[i, j] < val[i, j + 1] for i, j in cells if (i, j + 1) in val) and \
           all(val[i, j] < val[i + 1, j] for i, j in cells if (i + 1, j) in val):
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_formula_against_brute_force(n):
    for r in range(n // 2 + 1):
        assert hook_component_count(n, r) == _brute_syt(n, r)


def test_hook_identity_small():
    for n in range(1, 9):
        for r in range(n // 2 + 1):
            spec = ModelSpec("A", n, r)
            assert count_orbits(spec) == hook_component_count(n, r) * hook_factor(n, r)


@pytest.mark.parametrize("r", range(0, 7))
def test_involution_counts(r):
    assert involution_count(r) == len(involutions(r))
    assert involution_count(r, True) == len(involutions(r, True))


def test_orbit_stats_identity():
    st_ = orbit_stats(Perm.identity(8), ModelSpec("D", 8, 2))
    assert st_.d_v == 0 and st_.s_v.is_identity()


def test_sv_makes_middle_admissible():
    spec = ModelSpec("D", 8, 2)
    for v in weyl_group(spec):
        s = orbit_stats(v, spec)
        assert (not s.s_v.is_identity()) == (s.d_v % 2 == 1)
        assert in_weyl(s.s_v * middle_induced(v, spec), spec.middle)


@pytest.mark.parametrize("p", ["1 2 3", "3 1 2", "2 3 1 4", "4 3 2 1"])
def test_bruhat_cell_of_permutation(p):
    assert bruhat_cell(perm_matrix(P(p))) == P(p)


def test_bruhat_cell_example():
    assert bruhat_cell(Matrix.from_rows([[1, 1], [1, 0]])) == P("2 1")
    with pytest.raises(ValueError):
        bruhat_cell(Matrix.from_rows([[1, 1], [1, 1]]))


upper = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


@given(upper, upper)
def test_bruhat_cell_double_coset_invariance(a, b):
    p = P("2 3 1")

    def tri(vals):
        return Matrix.from_rows([[vals[0] or 1, vals[1], vals[2]],
                                 [0, vals[3] or 1, vals[4]],
                                 [0, 0, vals[5] or 1]])
    g = tri(a) @ perm_matrix(p) @ tri(b)
    assert bruhat_cell(g) == p


def test_classifier_examples():
    spec = ModelSpec("D", 4, 2)
    assert classify_orbit_u(Matrix.identity(2), spec) == P("2 1")
    for signs in itertools.product((1, -1), repeat=2):
        for p in weyl_group((0, 2)):
            x = perm_matrix(p) @ Matrix.diagonal(list(signs))
            u = classify_orbit_u(x, spec)
            assert u * u == Perm.identity(2) and u(1) != 1


@pytest.mark.parametrize("spec", [ModelSpec("D", 4, 2), ModelSpec("D", 8, 4)])
def test_classifier_fixed_point_free_and_b_invariant(spec):
    rng = random.Random(5)
    r = spec.r
    for _ in range(6):
        x = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(r)] for _ in range(r)])
        if not x.det():
            continue
        u = classify_orbit_u(x, spec)
        assert u * u == Perm.identity(r)
        assert all(u(i) != i for i in range(1, r + 1))
        b = Matrix.from_rows([[rng.randint(1, 3) if i == j else (rng.randint(-2, 2) if i < j else 0)
                               for j in range(r)] for i in range(r)])
        assert classify_orbit_u(x @ b, spec) == u


def test_classifier_rejects_type_a():
    with pytest.raises(ValueError):
        classify_orbit_u(Matrix.identity(1), ModelSpec("A", 3, 1))


def test_conjugator():
    for r in range(1, 6):
        w0 = sigma0(0, r)
        for u in involutions(r):
            s = conjugator_to_w0(u)
            fixed = sum(u(i) == i for i in range(1, r + 1))
            if fixed == r % 2:
                assert s.inverse() * w0 * s == u
            else:
                assert s is None


def test_t_fixed_reps_type_a_injective():
    spec = ModelSpec("A", 4, 1)
    reps = [t_fixed_rep(p, spec) for p in orbit_params(spec)]
    assert len(set(reps)) == len(reps)
    assert t_fixed_rep(OrbitParam(Perm.identity(1), Perm.identity(4)), spec).is_identity()


def test_t_fixed_reps_types_bd_always_exist():
    for spec in [ModelSpec("D", 6, 2), ModelSpec("B", 9, 4)]:
        for p in orbit_params(spec):
            rep = t_fixed_rep(p, spec)
            assert rep is not None and in_weyl(rep, spec)


def test_t_fixed_reps_type_c():
    spec = ModelSpec("C", 6, 3)
    with_point = without = 0
    for p in orbit_params(spec):
        rep = t_fixed_rep(p, spec)
        fixed = sum(p.u(i) == i for i in range(1, 4))
        assert (rep is not None) == (fixed == 1)
        with_point += rep is not None
        without += rep is None
    assert with_point and without
