"""Permutations and the Weyl groups of the matrix models.

Every Weyl group element is stored as a plain permutation of ``{1..d}``.
The groups of types B, C and D are realised inside ``S_d`` as the
permutations commuting with ``i -> d + 1 - i`` (plus a parity condition in
type D), which is how they act on the coordinate flags of the models.

Composition is ``(s * p)(i) = s(p(i))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

__all__ = [
    "Perm", "ModelSpec", "inversions", "check_of", "in_weyl", "type_length",
    "coxeter_length", "longest_element", "sigma0", "u0", "simple_reflections",
    "weyl_group", "parabolic_subgroup", "is_minimal_rep", "coset_decompose",
    "theta_on_WP", "induced_perm", "bruhat_leq", "block_diag",
    "enumerate_minimal_reps", "in_parabolic", "iter_perms", "NotInWeylGroupError",
]


class NotInWeylGroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation in one-line notation; ``images[i-1] = p(i)``."""

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, m: int) -> Perm:
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def parse(cls, text: str) -> Perm:
        """Accepts ``"3 1 4 2 5"`` and also comma separated or bracketed forms."""
        cleaned = text.replace(",", " ").replace("[", " ").replace("]", " ")
        return cls(tuple(int(t) for t in cleaned.split()))

    @classmethod
    def transposition(cls, m: int, *pairs: tuple[int, int]) -> Perm:
        img = list(range(1, m + 1))
        for a, b in pairs:
            img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        return cls(tuple(img))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Perm) -> Perm:
        if other.m != self.m:
            raise ValueError("permutations on different sets")
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Perm:
        inv = [0] * self.m
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self):
        return " ".join(map(str, self.images))

    def __repr__(self):
        return f"Perm([{', '.join(map(str, self.images))}])"


FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class ModelSpec:
    family: str
    n: int
    r: int

    def __post_init__(self):
        f, n, r = self.family, self.n, self.r
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        if n < 1 or r < 0 or r > n // 2:
            raise ValueError(f"need 0 <= r <= n/2, got n={n}, r={r}")
        if f == "B" and n % 2 == 0:
            raise ValueError("family B needs odd n")
        if f in "CD" and n % 2:
            raise ValueError(f"family {f} needs even n")
        if f in "BD" and r % 2:
            raise ValueError(f"family {f} needs even r")
        if f == "C" and r % 2 == 0:
            raise ValueError("family C needs odd r")

    @property
    def eps(self) -> int:
        """+1 for B/D, -1 for C, 0 as a marker for type A."""
        return {"A": 0, "B": 1, "C": -1, "D": 1}[self.family]

    @property
    def ambient(self) -> int:
        return self.n + 1 if self.family == "B" else self.n

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def blocks(self) -> tuple[int, int, int]:
        """Block sizes of the ambient matrices."""
        return (self.r, self.ambient - 2 * self.r, self.r)

    @property
    def middle(self) -> tuple[int, int]:
        """(eps, size) of the Weyl group acting on the middle window."""
        return (self.eps, self.n - 2 * self.r)

    @property
    def raw(self) -> tuple[int, int]:
        return (self.eps, self.n)

    def __str__(self):
        return f"({self.family},{self.n},{self.r})"


Raw = Union[ModelSpec, tuple]


def _raw(spec: Raw) -> tuple[int, int]:
    if isinstance(spec, ModelSpec):
        return spec.raw
    eps, d = spec
    if eps not in (0, 1, -1):
        raise ValueError("eps must be 0 (type A), 1 or -1")
    return int(eps), int(d)


def inversions(p: Perm) -> int:
    im = p.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def check_of(p: Perm) -> Perm:
    """``i -> m - p(m - i + 1) + 1``."""
    m = p.m
    return Perm(tuple(m - p(m - i + 1) + 1 for i in range(1, m + 1)))


def _top_count(p: Perm, h: int) -> int:
    return sum(1 for i in range(1, h + 1) if p(i) > h)


def in_weyl(p: Perm, spec: Raw) -> bool:
    eps, d = _raw(spec)
    if p.m != d:
        return False
    if eps == 0:
        return True
    if check_of(p) != p:
        return False
    if eps == 1 and d % 2 == 0:
        return _top_count(p, d // 2) % 2 == 0
    return True


def type_length(p: Perm, spec: Raw) -> int:
    """Coxeter length read off from inversions and the sign-change count."""
    eps, d = _raw(spec)
    if not in_weyl(p, (eps, d)):
        raise NotInWeylGroupError(f"{p} not in W(eps={eps}, {d})")
    inv = inversions(p)
    if eps == 0:
        return inv
    twice = inv - eps * _top_count(p, d // 2)
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"non-integral length for {p}")
    return twice // 2


@lru_cache(maxsize=None)
def simple_reflections(spec: Raw) -> tuple[Perm, ...]:
    eps, d = _raw(spec)
    if eps == 0:
        return tuple(Perm.transposition(d, (i, i + 1)) for i in range(1, d))
    m = d // 2
    gens = [Perm.transposition(d, (i, i + 1), (d - i, d - i + 1)) for i in range(1, m)]
    if m >= 1:
        if eps == -1:
            gens.append(Perm.transposition(d, (m, m + 1)))
        elif d % 2:
            gens.append(Perm.transposition(d, (m, m + 2)))
        elif m >= 2:
            gens.append(Perm.transposition(d, (m - 1, m + 1), (m, m + 2)))
    return tuple(gens)


def coxeter_length(p: Perm, spec: Raw) -> int:
    """Count greedy descent steps down to the identity.

    A step right-multiplies by a simple reflection that strictly lowers the
    inversion count.  Agreement with :func:`type_length` is a test, not an
    assumption.
    """
    raw = _raw(spec)
    if not in_weyl(p, raw):
        raise NotInWeylGroupError(f"{p} not in W{raw}")
    gens = simple_reflections(raw)
    steps = 0
    cur, inv = p, inversions(p)
    while not cur.is_identity():
        for s in gens:
            nxt = cur * s
            ninv = inversions(nxt)
            if ninv < inv:
                cur, inv = nxt, ninv
                steps += 1
                break
        else:
            raise ArithmeticError(f"no descending simple reflection at {cur}")
    return steps


def sigma0(eps: int, d: int) -> Perm:
    """Longest element of ``W(eps, d)`` (or of ``S_d`` when eps = 0)."""
    anti = list(range(d, 0, -1))
    if eps == 1 and d % 2 == 0 and (d // 2) % 2 == 1:
        m = d // 2
        anti[m - 1], anti[m] = m, m + 1
    return Perm(tuple(anti))


def longest_element(spec: Raw) -> Perm:
    return sigma0(*_raw(spec))


def u0(spec: ModelSpec) -> Perm:
    """The longest element of the Weyl group of the middle block."""
    return sigma0(*spec.middle)


@lru_cache(maxsize=None)
def weyl_group(spec: Raw) -> tuple[Perm, ...]:
    """All elements, in lexicographic order of one-line notation.

    Elements of types B/C/D are encoded by their images on ``{1..d//2}``.
    """
    eps, d = _raw(spec)
    if eps == 0:
        return tuple(Perm(p) for p in itertools.permutations(range(1, d + 1)))
    m = d // 2
    out = []
    for base in itertools.permutations(range(1, m + 1)):
        for signs in itertools.product((0, 1), repeat=m):
            img = [0] * d
            for i in range(m):
                x = base[i] if not signs[i] else d + 1 - base[i]
                img[i] = x
                img[d - 1 - i] = d + 1 - x
            if d % 2:
                img[m] = m + 1
            p = Perm(tuple(img))
            if in_weyl(p, (eps, d)):
                out.append(p)
    return tuple(sorted(out))


def block_diag(*perms: Perm) -> Perm:
    img, off = [], 0
    for p in perms:
        img.extend(x + off for x in p.images)
        off += p.m
    return Perm(tuple(img))


def _blocks(spec: ModelSpec) -> list[range]:
    n, r = spec.n, spec.r
    return [range(1, r + 1), range(r + 1, n - r + 1), range(n - r + 1, n + 1)]


@lru_cache(maxsize=None)
def parabolic_subgroup(spec: ModelSpec) -> tuple[Perm, ...]:
    """W_P: block-diagonal elements of W (on n letters)."""
    r = spec.r
    out = []
    if spec.family == "A":
        mid = spec.n - 2 * r
        sr = weyl_group((0, r))
        for a in sr:
            for b in weyl_group((0, mid)):
                for c in sr:
                    out.append(block_diag(a, b, c))
    else:
        for s in weyl_group((0, r)):
            for v in weyl_group(spec.middle):
                out.append(block_diag(s, v, check_of(s)))
    return tuple(sorted(out))


def _increasing(p: Perm, positions) -> bool:
    vals = [p(i) for i in positions]
    return all(a < b for a, b in zip(vals, vals[1:]))


def is_minimal_rep(u: Perm, spec: ModelSpec) -> bool:
    """Membership in W^P via the increasing-block conditions."""
    if not in_weyl(u, spec):
        return False
    n, r = spec.n, spec.r
    if spec.family == "A":
        return all(_increasing(u, b) for b in _blocks(spec))
    h = n // 2
    if not (_increasing(u, range(1, r + 1)) and _increasing(u, range(r + 1, h + 1))):
        return False
    # midpoint condition, only meaningful when the middle Weyl group is nontrivial
    k = (n - 2 * r) // 2
    eps = spec.eps
    if k == 0 or (eps == 1 and n % 2 == 0 and k == 1):
        return True
    j = h + 1 + (eps + (-1) ** n) // 2
    return u(h) < u(j)


@lru_cache(maxsize=None)
def enumerate_minimal_reps(spec: ModelSpec) -> tuple[Perm, ...]:
    if spec.family != "A":
        return tuple(p for p in weyl_group(spec) if is_minimal_rep(p, spec))
    # type A: choose the value set of each block, filled increasingly
    n, r = spec.n, spec.r
    values = set(range(1, n + 1))
    out = []
    for first in itertools.combinations(sorted(values), r):
        rest = sorted(values - set(first))
        for last in itertools.combinations(rest, r):
            mid = [x for x in rest if x not in last]
            out.append(Perm(tuple(first) + tuple(mid) + tuple(last)))
    return tuple(sorted(out))


def in_parabolic(p: Perm, spec: ModelSpec) -> bool:
    if not in_weyl(p, spec):
        return False
    blocks = _blocks(spec)
    if not all(p(i) in b for b in blocks for i in b):
        return False
    if spec.family == "A":
        return True
    r = spec.r
    first = Perm(tuple(p(i) for i in range(1, r + 1)))
    last = Perm(tuple(p(i) - (spec.n - r) for i in range(spec.n - r + 1, spec.n + 1)))
    return check_of(first) == last


def coset_decompose(w: Perm, spec: ModelSpec) -> tuple[Perm, Perm]:
    """Write ``w = tau * nu`` with tau in W_P and nu^-1 in W^P."""
    if not in_weyl(w, spec):
        raise NotInWeylGroupError(f"{w} not in W{spec}")
    winv = w.inverse()
    found = [t for t in parabolic_subgroup(spec) if is_minimal_rep(winv * t, spec)]
    if len(found) != 1:
        raise ArithmeticError(f"coset decomposition of {w} not unique: {len(found)}")
    tau = found[0]
    return tau, tau.inverse() * w


def theta_on_WP(tau: Perm, spec: ModelSpec) -> Perm:
    """Swap the two corner blocks (checking them in types B/C/D)."""
    if not in_parabolic(tau, spec):
        raise ValueError(f"{tau} is not block diagonal for {spec}")
    n, r = spec.n, spec.r
    first = Perm(tuple(tau(i) for i in range(1, r + 1)))
    mid = Perm(tuple(tau(i) - r for i in range(r + 1, n - r + 1)))
    last = Perm(tuple(tau(i) - (n - r) for i in range(n - r + 1, n + 1)))
    if spec.family == "A":
        return block_diag(last, mid, first)
    return block_diag(check_of(first), mid, first)


def induced_perm(p: Perm, k: int, m: int) -> Perm:
    """Relative order of ``p(k+1), ..., p(k+m)``."""
    if k < 0 or k + m > p.m:
        raise ValueError("window does not fit")
    vals = [p(k + j) for j in range(1, m + 1)]
    order = sorted(vals)
    return Perm(tuple(order.index(v) + 1 for v in vals))


def bruhat_leq(u: Perm, w: Perm, spec: Raw) -> bool:
    raw = _raw(spec)
    for x in (u, w):
        if not in_weyl(x, raw):
            raise NotInWeylGroupError(f"{x} not in W{raw}")
    return _bruhat(u, w, raw)


@lru_cache(maxsize=200_000)
def _bruhat(u: Perm, w: Perm, raw) -> bool:
    lw = type_length(w, raw)
    lu = type_length(u, raw)
    if lu > lw:
        return False
    if lw == 0:
        return u.is_identity()
    for s in simple_reflections(raw):
        ws = w * s
        if type_length(ws, raw) < lw:
            us = u * s
            lower = us if type_length(us, raw) < lu else u
            return _bruhat(lower, ws, raw)
    raise ArithmeticError(f"no descent found for {w}")


def iter_perms(m: int) -> Iterator[Perm]:
    for p in itertools.permutations(range(1, m + 1)):
        yield Perm(p)
