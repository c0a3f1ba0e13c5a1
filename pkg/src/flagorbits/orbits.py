"""Counting and parametrising Z-orbits on the flag variety G/B.

Orbits are indexed by pairs ``(u, v)`` with ``v`` a minimal coset
representative and ``u`` a permutation of ``{1..r}`` (type A) or an
involution of ``{1..r}`` (types B/C/D, fixed-point free for B/D).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, prod
from typing import Optional

from .exactla import Matrix
from .models import i_eps
from .weyl import (ModelSpec, Perm, block_diag, check_of, enumerate_minimal_reps,
                   in_weyl, induced_perm, sigma0)


@dataclass(frozen=True)
class OrbitParam:
    u: Perm
    v: Perm


@dataclass(frozen=True)
class OrbitStats:
    d_v: int
    s_v: Perm


def enumerate_WP(spec: ModelSpec) -> list[Perm]:
    """Minimal coset representatives, lexicographically ordered."""
    return list(enumerate_minimal_reps(spec))


def involution_count(r: int, fixed_point_free: bool = False) -> int:
    if fixed_point_free:
        return 0 if r % 2 else factorial(r) // (2 ** (r // 2) * factorial(r // 2))
    a, b = 1, 1  # I(0), I(1)
    if r == 0:
        return 1
    for k in range(2, r + 1):
        a, b = b, b + (k - 1) * a
    return b


def involutions(r: int, fixed_point_free: bool = False) -> list[Perm]:
    out = []
    for img in itertools.permutations(range(1, r + 1)):
        p = Perm(img)
        if p * p == Perm.identity(r):
            if fixed_point_free and any(p(i) == i for i in range(1, r + 1)):
                continue
            out.append(p)
    return out


def count_orbits(spec: ModelSpec) -> int:
    wp = len(enumerate_minimal_reps(spec))
    r = spec.r
    if spec.family == "A":
        return factorial(r) * wp
    return involution_count(r, fixed_point_free=spec.eps == 1) * wp


def hook_component_count(n: int, r: int) -> int:
    """Standard tableaux of shape (2^r, 1^(n-2r)) via the hook length formula."""
    if not 0 <= r <= n // 2:
        raise ValueError("need r <= n/2")
    rows = [2] * r + [1] * (n - 2 * r)
    cols = [len(rows), r]
    hooks = 1
    for i, length in enumerate(rows):
        for j in range(length):
            hooks *= (length - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // hooks


def hook_factor(n: int, r: int) -> int:
    return prod(range(n - 2 * r + 2, n - r + 2))


def orbit_stats(v: Perm, spec: ModelSpec) -> OrbitStats:
    if not in_weyl(v, spec):
        raise ValueError(f"{v} not in W{spec}")
    n, r = spec.n, spec.r
    h = n // 2
    vinv = v.inverse()
    d = sum(1 for i in range(r + 1, h + 1) if vinv(i) > h)
    size = n - 2 * r
    s = Perm.identity(size)
    if spec.eps == 1 and n % 2 == 0 and d % 2 == 1:
        s = Perm.transposition(size, (size // 2, size // 2 + 1))
    return OrbitStats(d, s)


def middle_induced(v: Perm, spec: ModelSpec) -> Perm:
    """Permutation induced by ``v^-1`` on the middle window."""
    return induced_perm(v.inverse(), spec.r, spec.n - 2 * spec.r)


def _lower_left_ranks(g: Matrix):
    m = g.rows
    rk = {}
    for i in range(1, m + 2):
        for j in range(0, m + 1):
            if i > m or j == 0:
                rk[i, j] = 0
            else:
                rk[i, j] = g.submatrix(range(i - 1, m), range(j)).rank()
    return rk


def bruhat_cell(g: Matrix, m: Optional[int] = None) -> Perm:
    """The permutation ``p`` with ``g`` in ``B p B`` (B upper triangular)."""
    m = g.rows if m is None else m
    if g.shape != (m, m):
        raise ValueError("shape mismatch")
    if g.rank() != m:
        raise ValueError("bruhat_cell needs an invertible matrix")
    rk = _lower_left_ranks(g)
    img = [0] * m
    for j in range(1, m + 1):
        for i in range(1, m + 1):
            if rk[i, j] - rk[i, j - 1] - rk[i + 1, j] + rk[i + 1, j - 1] == 1:
                img[j - 1] = i
    return Perm(tuple(img))


def classify_orbit_u(x: Matrix, spec: ModelSpec) -> Perm:
    """The involution u with ``I delta(x) I x`` in ``B w0 u B``."""
    if spec.family == "A":
        raise ValueError("classification by involutions is for types B, C, D")
    r = spec.r
    I = i_eps(-spec.eps, r, x.field)
    y = I @ x.delta() @ I @ x
    w0 = sigma0(0, r)
    return w0 * bruhat_cell(y, r)


def conjugator_to_w0(u: Perm) -> Optional[Perm]:
    """``s`` with ``s^-1 w0 s = u``, or None if u is not conjugate to w0."""
    r = u.m
    fixed = [i for i in range(1, r + 1) if u(i) == i]
    if u * u != Perm.identity(r) or len(fixed) != r % 2:
        return None
    img = [0] * r
    k = 1
    for a in range(1, r + 1):
        b = u(a)
        if b > a:
            img[a - 1], img[b - 1] = k, r + 1 - k
            k += 1
    for c in fixed:
        img[c - 1] = (r + 1) // 2
    return Perm(tuple(img))


def t_fixed_rep(param: OrbitParam, spec: ModelSpec) -> Optional[Perm]:
    """A Weyl element whose coset is a T-fixed point of the orbit, if any."""
    u, v = param.u, param.v
    r, n = spec.r, spec.n
    mid = Perm.identity(n - 2 * r)
    if spec.family == "A":
        return block_diag(u, mid, Perm.identity(r)) * v.inverse()
    s = conjugator_to_w0(u)
    if s is None:
        return None
    return block_diag(s, mid, check_of(s)) * v.inverse()


def orbit_params(spec: ModelSpec) -> list[OrbitParam]:
    vs = enumerate_WP(spec)
    r = spec.r
    if spec.family == "A":
        us = [Perm(p) for p in itertools.permutations(range(1, r + 1))]
    else:
        us = involutions(r, fixed_point_free=spec.eps == 1)
    return [OrbitParam(u, v) for u in us for v in vs]
