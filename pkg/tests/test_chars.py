import pytest
from hypothesis import given, strategies as st

from flagorbits.chars import (RootSystem, dominance_character, dominant_by_inequalities,
                              group_root_system, h_root_system, pairing, restrict, rho)
from flagorbits.weyl import ModelSpec


@pytest.mark.parametrize("kind,rank,two_rho", [
    ("A", 3, (3, 1, -1, -3)),
    ("B", 3, (5, 3, 1)),
    ("C", 3, (6, 4, 2)),
    ("D", 4, (6, 4, 2, 0)),
])
def test_two_rho(kind, rank, two_rho):
    R = RootSystem(kind, rank)
    assert R.two_rho() == two_rho
    assert R.two_rho_from_fundamentals() == two_rho


@pytest.mark.parametrize("kind,rank,count", [("A", 4, 10), ("B", 3, 9), ("C", 4, 16), ("D", 4, 12)])
def test_root_counts(kind, rank, count):
    assert len(RootSystem(kind, rank).positive_roots()) == count


@pytest.mark.parametrize("kind", "ABCD")
@pytest.mark.parametrize("rank", range(1, 5))
def test_simple_roots_pair_to_two_with_rho(kind, rank):
    if kind == "D" and rank < 2:
        return
    R = RootSystem(kind, rank)
    # <2 rho, alpha^vee> = 2 for every simple root
    assert all(pairing(R.two_rho(), a) == 2 for a in R.simple_roots())


def test_spec_examples():
    assert dominance_character(ModelSpec("A", 7, 3)) == ((0, 0, 0), True)
    assert dominance_character(ModelSpec("D", 8, 4)) == ((1, 1), True)
    assert dominance_character(ModelSpec("B", 7, 2)) == ((1,), True)
    assert dominance_character(ModelSpec("C", 6, 3)) == ((-1,), False)
    assert dominance_character(ModelSpec("C", 10, 5)) == ((-1, -1), False)


def test_c_with_rank_zero_h():
    # H has rank 0 when r = 1; the weight is empty
    assert dominance_character(ModelSpec("C", 6, 1)) == ((), True)


def test_h_types():
    assert h_root_system(ModelSpec("D", 8, 4)) == RootSystem("C", 2)
    assert h_root_system(ModelSpec("C", 10, 5)) == RootSystem("B", 2)
    assert group_root_system(ModelSpec("B", 7, 2)) == RootSystem("B", 3)
    assert rho("G", ModelSpec("D", 6, 2)) == (4, 2, 0)


def test_restrict_rejects_wrong_length():
    with pytest.raises(ValueError):
        restrict((1, 2), ModelSpec("D", 6, 2))


SPECS = [ModelSpec("A", 7, 3), ModelSpec("B", 9, 4), ModelSpec("C", 10, 5), ModelSpec("D", 8, 4)]
ints = st.integers(-20, 20)


@pytest.mark.parametrize("spec", SPECS)
@given(data=st.data(), a=ints, b=ints)
def test_restrict_linear(spec, data, a, b):
    size = len(rho("G", spec))
    lam = data.draw(st.lists(ints, min_size=size, max_size=size))
    mu = data.draw(st.lists(ints, min_size=size, max_size=size))
    comb = tuple(a * x + b * y for x, y in zip(lam, mu))
    want = tuple(a * x + b * y for x, y in zip(restrict(lam, spec), restrict(mu, spec)))
    assert restrict(comb, spec) == want


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 3), ("D", 4)])
@given(data=st.data())
def test_two_dominance_tests_agree(kind, rank, data):
    R = RootSystem(kind, rank)
    mu = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=R.dim, max_size=R.dim)))
    assert R.is_dominant(mu) == dominant_by_inequalities(mu, R)
