"""Correcting Weyl group representatives and checking the resolution hypotheses.

Given ``v`` in W we build ``z0`` in Z (a monomial matrix) and the corrected
``w = zeta(z0)^-1 v``, then compare Lie-algebra dimensions computed by exact
linear algebra against the combinatorial length formulas.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Optional

from .exactla import QQ, Matrix, MatSpace, intersect, span
from .models import (apply_varpi, borel_lie, pattern_space, i_eps, in_group, lie_basis, member, perm_matrix,
                     random_z, signed_perm_matrix, zeta)
from .orbits import conjugator_to_w0, middle_induced, orbit_stats
from .weyl import (ModelSpec, Perm, block_diag, coset_decompose, in_weyl,
                   induced_perm, theta_on_WP, type_length, u0)

DEFAULT_SEED = 20240611
Z_SAMPLES = 50


class PreconditionError(ValueError):
    pass


# -- permutation lemma --------------------------------------------------------

def alternative_holds(v: Perm) -> bool:
    """``v(i) < v(j)`` or ``v(i') > v(j')`` for all ``i < j`` (primes = mirror)."""
    d = v.m
    bar = lambda i: d + 1 - i
    return all(v(i) < v(j) or v(bar(i)) > v(bar(j))
               for i in range(1, d + 1) for j in range(i + 1, d + 1))


def find_sigma(v: Perm) -> Perm:
    """A mirror-symmetric ``s`` such that ``v * s`` satisfies the alternative."""
    d = v.m
    k = d // 2
    bar = lambda i: d + 1 - i
    a = Perm.identity(d)
    for i in range(1, k + 1):
        if v(i) > v(bar(i)):
            a = a * Perm.transposition(d, (i, bar(i)))
    va = v * a
    # b permutes the mirror pairs, keeping sides, so that v a b increases on 1..k
    order = sorted(range(1, k + 1), key=va)
    img = list(range(1, d + 1))
    for i, j in enumerate(order, 1):
        img[i - 1] = j
        img[bar(i) - 1] = bar(j)
    b = Perm(tuple(img))
    return a * b


# -- conditions ---------------------------------------------------------------

def _decreasing(p: Perm, positions) -> bool:
    vals = [p(i) for i in positions]
    return all(x > y for x, y in zip(vals, vals[1:]))


def _increasing(p: Perm, positions) -> bool:
    vals = [p(i) for i in positions]
    return all(x < y for x, y in zip(vals, vals[1:]))


def check_conditions(w: Perm, spec: ModelSpec) -> tuple[bool, bool]:
    if not in_weyl(w, spec):
        raise ValueError(f"{w} not in W{spec}")
    n, r = spec.n, spec.r
    winv = w.inverse()
    if spec.family == "A":
        return (_decreasing(winv, range(r + 1, n - r + 1)),
                _increasing(winv, range(1, r + 1)))
    s_w = orbit_stats(w, spec).s_v
    a = middle_induced(w, spec) == s_w * u0(spec)
    b = all(winv(i) < winv(j) or winv(r - i + 1) > winv(r - j + 1)
            for i in range(1, r + 1) for j in range(i + 1, r + 1))
    return a, b


# -- the correction -----------------------------------------------------------

def _sorting_perm(vals, decreasing=False) -> Perm:
    """``s`` such that ``vals[s(j)-1]`` is sorted."""
    order = sorted(range(len(vals)), key=lambda j: vals[j], reverse=decreasing)
    return Perm(tuple(j + 1 for j in order))


def _g2(sigma2: Perm, spec: ModelSpec) -> Matrix:
    r = spec.r
    M = perm_matrix(sigma2)
    if spec.eps == 1:
        # I s I = diag(lam, delta lam) s; take g2 = diag(lam, 1) s
        I = i_eps(-1, r)
        c = [I[i, i] * I[sigma2.inverse()(i + 1) - 1, sigma2.inverse()(i + 1) - 1]
             for i in range(r)]
        lam = c[: r // 2]
        g2 = Matrix.diagonal(lam + [1] * (r - r // 2)) @ M
    else:
        det = M.det()
        d = [1] * r
        d[(r + 1) // 2 - 1] = det
        g2 = M @ Matrix.diagonal(d)
    if not in_group(g2, 0, r) or not _in_corner_group(g2, spec):
        raise ArithmeticError("corner lift failed")
    return g2


def _in_corner_group(g: Matrix, spec: ModelSpec) -> bool:
    I = i_eps(-spec.eps, spec.r)
    return I @ g.delta() @ I @ g == Matrix.identity(spec.r)


def fix_representative(v: Perm, spec: ModelSpec) -> tuple[Matrix, Perm]:
    """Return ``(z0, w)`` with ``z0`` in Z monomial and ``w = zeta(z0)^-1 v``."""
    if not in_weyl(v, spec):
        raise ValueError(f"{v} not in W{spec}")
    n, r = spec.n, spec.r
    vinv = v.inverse()
    if spec.family == "A":
        s1 = _sorting_perm([vinv(i) for i in range(r + 1, n - r + 1)], decreasing=True)
        s2 = _sorting_perm([vinv(i) for i in range(1, r + 1)])
        z0 = perm_matrix(block_diag(s2, s1, s2))
    else:
        eps = spec.eps
        u = middle_induced(v, spec)
        s_v = orbit_stats(v, spec).s_v
        s1 = (s_v * u).inverse() * u0(spec)
        s2 = find_sigma(induced_perm(vinv, 0, r))
        g1 = signed_perm_matrix(s1, eps, odd_orthogonal=spec.family == "B")
        g2 = _g2(s2, spec)
        I = i_eps(-eps, r)
        z0 = Matrix.block_diagonal([g2, g1, I @ g2 @ I])
    if not member(z0, "Z", spec):
        raise ArithmeticError(f"z0 not in Z for v={v}")
    w = zeta(z0, spec).inverse() * v
    return z0, w


# -- dimension oracle -----------------------------------------------------------

@lru_cache(maxsize=None)
def _lie(tag, spec: ModelSpec) -> MatSpace:
    return lie_basis(tag, spec, QQ)


@lru_cache(maxsize=None)
def dim_quotients(spec: ModelSpec) -> tuple[int, int]:
    """(dim Z/Z cap B, dim H/B_H) from the Lie algebras."""
    Z, H, B = _lie("Z", spec), _lie("H", spec), _lie("B", spec)
    return Z.dim - intersect(Z, B).dim, H.dim - intersect(H, B).dim


def dim_orbit_oracle(w: Perm, spec: ModelSpec) -> tuple[int, int, int]:
    if not in_weyl(w, spec):
        raise ValueError(f"{w} not in W{spec}")
    Z = _lie("Z", spec)
    Bw = lie_basis(("Bw", w), spec, QQ)
    inter = intersect(Z, Bw).dim
    return Z.dim, inter, Z.dim - inter


def formula_codim(w: Perm, spec: ModelSpec) -> int:
    """``l(w) + dim Z/Z cap B + l(tau^-1 theta(tau))/2 - l(tau)``."""
    tau, _ = coset_decompose(w, spec)
    t = tau.inverse() * theta_on_WP(tau, spec)
    lt = type_length(t, spec)
    if lt % 2:
        raise ArithmeticError("odd length of tau^-1 theta(tau)")
    dzb, _ = dim_quotients(spec)
    return type_length(w, spec) + dzb + lt // 2 - type_length(tau, spec)


@dataclass
class LengthIdentity:
    len_tau: int
    len_tau_theta: int
    len_u0: int
    lhs: int
    dim_gap: int
    holds: bool


def length_identity(w: Perm, spec: ModelSpec) -> LengthIdentity:
    a, b = check_conditions(w, spec)
    if not (a and b):
        raise PreconditionError(f"{w} violates condition {'a' if not a else 'b'}")
    tau, _ = coset_decompose(w, spec)
    lt = type_length(tau, spec)
    ltt = type_length(tau.inverse() * theta_on_WP(tau, spec), spec)
    lu0 = type_length(u0(spec), spec.middle)
    dzb, dhb = dim_quotients(spec)
    lhs2 = 2 * lt - ltt
    if lhs2 % 2:
        raise ArithmeticError("half-integral length difference")
    lhs = lhs2 // 2
    return LengthIdentity(lt, ltt, lu0, lhs, dzb - dhb, lhs == lu0 == dzb - dhb)


# -- hypotheses ---------------------------------------------------------------

def _embed_middle(X: Matrix, spec: ModelSpec) -> Matrix:
    r = spec.r
    return Matrix.block_diagonal([Matrix.zeros(r, r), X, Matrix.zeros(r, r)])


def _middle_spec_lie_borel(spec: ModelSpec) -> MatSpace:
    """Lie algebra of the middle Borel, conjugated by a lift of u0, inside gl_N."""
    eps, d = spec.middle
    size = spec.ambient - 2 * spec.r
    if size == 0:
        return MatSpace((spec.ambient, spec.ambient), ())
    Bm = borel_lie(spec.family, d)
    g = signed_perm_matrix(u0(spec), eps, odd_orthogonal=spec.family == "B")
    conj = Bm.conjugate(g)
    N = spec.ambient
    return span([_embed_middle(X, spec) for X in conj.basis], (N, N))


@lru_cache(maxsize=None)
def sampled_varpi_shapes(spec: ModelSpec, seed: int = DEFAULT_SEED,
                         samples: int = Z_SAMPLES) -> bool:
    """For sampled z in Z(Q), ``z^-1 varpi(z)`` is unipotent-cornered block upper
    triangular with middle block in the middle group."""
    rng = random.Random(seed)
    N, r = spec.ambient, spec.r
    mid = range(r, N - r)
    for _ in range(samples):
        z = random_z(spec, rng)
        y = z.inverse() @ apply_varpi(z, spec)
        one_r = Matrix.identity(r)
        if y.submatrix(range(r), range(r)) != one_r:
            return False
        if y.submatrix(range(N - r, N), range(N - r, N)) != one_r:
            return False
        blk = [0 if i < r else (2 if i >= N - r else 1) for i in range(N)]
        if any(y[i, j] for i in range(N) for j in range(N) if blk[i] > blk[j]):
            return False
        C = y.submatrix(mid, mid)
        if not in_group(C, spec.eps, spec.n - 2 * r, odd_orthogonal=spec.family == "B"):
            return False
    return True


def _varpi_differential(X: Matrix, spec: ModelSpec) -> Matrix:
    N, r = spec.ambient, spec.r
    A = X.submatrix(range(r), range(r))
    C = X.submatrix(range(N - r, N), range(N - r, N))
    return Matrix.block_diagonal([A, Matrix.zeros(N - 2 * r, N - 2 * r), C])


@dataclass
class ResolutionReport:
    v: str
    w: str
    tau: str
    nu: str
    z0: list
    len_w: int
    len_tau: int
    len_tau_theta: int
    len_u0: int
    dim_Z: int
    dim_ZcapBw: int
    dim_H_mod_BH: int
    conditions: tuple
    hypotheses: Optional[dict]
    caveat: Optional[str] = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.hypotheses is None:
            return True
        return all(self.conditions) and all(self.hypotheses.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["conditions"] = list(self.conditions)
        return d


def hypothesis_report(v: Perm, spec: ModelSpec, u: Optional[Perm] = None,
                      seed: int = DEFAULT_SEED) -> ResolutionReport:
    """Run the correction and every checkable hypothesis for one ``v``.

    In type C the optional orbit parameter ``u`` selects the orbit; when that
    orbit has no T-fixed point only a caveat is reported.
    """
    from .exactla import matrix_to_json
    z0, w = fix_representative(v, spec)
    tau, nu = coset_decompose(w, spec)
    cond = check_conditions(w, spec)
    dim_Z, dim_int, codim = dim_orbit_oracle(w, spec)
    dzb, dhb = dim_quotients(spec)
    lw = type_length(w, spec)
    lt = type_length(tau, spec)
    ltt = type_length(tau.inverse() * theta_on_WP(tau, spec), spec)
    lu0 = type_length(u0(spec), spec.middle)
    base = dict(v=str(v), w=str(w), tau=str(tau), nu=str(nu), z0=matrix_to_json(z0),
                len_w=lw, len_tau=lt, len_tau_theta=ltt, len_u0=lu0, dim_Z=dim_Z,
                dim_ZcapBw=dim_int, dim_H_mod_BH=dhb, conditions=cond)
    if spec.family == "C" and u is not None and conjugator_to_w0(u) is None:
        return ResolutionReport(**base, hypotheses=None,
                                caveat=f"orbit with parameter u={u} has no T-fixed point")
    failures = []
    # 1: group-level dimension (length formula) equals l(w) + dim H/B_H
    h1 = formula_codim(w, spec) == lw + dhb
    if not h1:
        failures.append("hypothesis 1: formula codim != l(w) + dim H/B_H")
    # 2: conjugated middle Borel inside Lie(wB), and sampled block shapes
    Bw = lie_basis(("Bw", w), spec)
    h2a = Bw.contains_space(_middle_spec_lie_borel(spec))
    h2b = sampled_varpi_shapes(spec, seed)
    if not h2a:
        failures.append("hypothesis 2: middle Borel not contained in Lie(wB)")
    if not h2b:
        failures.append("hypothesis 2: sampled z^-1 varpi(z) has the wrong shape")
    # 3: Levi/unipotent split of lie(Z cap wB) and d(varpi) lands in Lie B_H
    ZB = intersect(_lie("Z", spec), Bw)
    N = spec.ambient
    blk = [0 if i < spec.r else (2 if i >= N - spec.r else 1) for i in range(N)]
    levi = pattern_space(lambda i, j: blk[i] == blk[j], N)
    unip = pattern_space(lambda i, j: blk[i] < blk[j], N)
    split = intersect(ZB, levi).dim + intersect(ZB, unip).dim == ZB.dim
    BH = intersect(_lie("H", spec), _lie("B", spec))
    into = all(_varpi_differential(X, spec) in BH for X in ZB.basis)
    h3 = split and into
    if not h3:
        failures.append("hypothesis 3: Lie shadow failed")
    # 4: Lie dimension of the intersection matches the group dimension
    h4 = ZB.dim == dim_Z - lw - dhb
    if not h4:
        failures.append("hypothesis 4: dim lie(Z cap wB) != dim Z - l(w) - dim H/B_H")
    if not all(cond):
        failures.append(f"conditions (a, b) = {cond}")
    hyps = {"1": h1, "2": h2a and h2b, "3": h3, "4": h4}
    return ResolutionReport(**base, hypotheses=hyps, failures=failures)
