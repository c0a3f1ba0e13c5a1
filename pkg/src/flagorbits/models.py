"""Matrix models of the classical groups together with an order-two nilpotent.

Ambient matrices have size ``spec.ambient``: ``n`` for types A, C, D and
``n + 1`` for type B, where the odd orthogonal group sits inside ``O_{n+1}``
as the stabiliser of the vector ``dagger = e_{k+1} - e_{k+2}`` (``n = 2k+1``).

Permutation matrices follow ``M[p(j), j] = 1`` so that ``M_p e_j = e_{p(j)}``
and ``M_{p*q} = M_p M_q``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactla import GF, QQ, Field, Matrix, MatSpace, nullspace, span
from .weyl import ModelSpec, Perm, in_weyl

TAGS = ("G", "B", "T", "P", "L", "Z", "H")


class CharacteristicError(ValueError):
    pass


@dataclass(frozen=True)
class GroupTag:
    name: str
    w: Optional[Perm] = None

    def __post_init__(self):
        if self.name not in TAGS + ("Bw",):
            raise ValueError(f"unknown group tag {self.name!r}")
        if (self.name == "Bw") != (self.w is not None):
            raise ValueError("Bw needs a permutation and only Bw takes one")

    @classmethod
    def parse(cls, text: str) -> GroupTag:
        if text.startswith("Bw:"):
            return cls("Bw", Perm.parse(text[3:]))
        return cls(text)

    def __str__(self):
        return f"Bw:{self.w}" if self.w is not None else self.name


def _tag(tag) -> GroupTag:
    if isinstance(tag, GroupTag):
        return tag
    if isinstance(tag, tuple):
        return GroupTag(*tag)
    return GroupTag.parse(tag)


# -- constants --------------------------------------------------------------

def i_eps(eps: int, m: int, field: Field = QQ) -> Matrix:
    """``diag(I_{(m+1)//2}, eps * I_{m//2})``."""
    return Matrix.diagonal([1] * ((m + 1) // 2) + [eps] * (m // 2), field)


def _corner(spec: ModelSpec, field: Field) -> Matrix:
    if spec.family == "A":
        return Matrix.identity(spec.r, field)
    return i_eps(-spec.eps, spec.r, field)


def perm_matrix(p: Perm, field: Field = QQ) -> Matrix:
    m = p.m
    data = [[field.zero] * m for _ in range(m)]
    for j in range(1, m + 1):
        data[p(j) - 1][j - 1] = field.one
    return Matrix.from_rows(data, field)


def nilpotent_e(spec: ModelSpec, field: Field = QQ) -> Matrix:
    N, r = spec.ambient, spec.r
    c = _corner(spec, field)
    data = [[field.zero] * N for _ in range(N)]
    for i in range(r):
        data[i][N - r + i] = c[i, i]
    return Matrix.from_rows(data, field)


def dagger(spec: ModelSpec, field: Field = QQ) -> Matrix:
    N = spec.ambient
    k = spec.n // 2
    v = [field.zero] * N
    v[k] = field.one
    v[k + 1] = field(-1)
    return Matrix(N, 1, tuple(v), field)


def double_middle(p: Perm) -> Perm:
    """Embed ``W`` of type B (on ``n = 2k+1`` letters) into ``S_{n+1}``.

    The fixed middle point ``k+1`` becomes the fixed pair ``k+1, k+2``.
    """
    n = p.m
    k = n // 2

    def phi(i):
        return i if i <= k + 1 else i + 1

    img = [0] * (n + 1)
    for i in range(1, n + 1):
        if i != k + 1:
            img[phi(i) - 1] = phi(p(i))
    img[k] = k + 1
    img[k + 1] = k + 2
    return Perm(tuple(img))


def collapse_middle(p: Perm) -> Perm:
    """Inverse of :func:`double_middle` on permutations stabilising the pair."""
    N = p.m
    k = (N - 2) // 2
    mid = {k + 1, k + 2}
    if {p(k + 1), p(k + 2)} != mid:
        raise ValueError(f"{p} does not stabilise the middle pair")

    def psi(i):
        return i if i <= k + 1 else i - 1

    img = [psi(p(i)) for i in range(1, N + 1) if i != k + 2]
    return Perm(tuple(img))


def top_parity(p: Perm) -> int:
    h = p.m // 2
    return sum(1 for i in range(1, h + 1) if p(i) > h) % 2


def monomial_support(g: Matrix) -> Perm:
    """The permutation ``p`` with ``g[p(j), j] != 0``; g must be monomial."""
    img = []
    for j in range(g.cols):
        nz = [i for i in range(g.rows) if g[i, j]]
        if len(nz) != 1:
            raise ValueError("not a monomial matrix")
        img.append(nz[0] + 1)
    return Perm(tuple(img))


def zeta(g: Matrix, spec: ModelSpec) -> Perm:
    """Weyl group element of a monomial matrix of the model (signs ignored)."""
    p = monomial_support(g)
    return collapse_middle(p) if spec.family == "B" else p


def weyl_matrix(w: Perm, spec: ModelSpec, field: Field = QQ) -> Matrix:
    """A monomial element of G lying over ``w``."""
    if not in_weyl(w, spec):
        raise ValueError(f"{w} is not in W{spec}")
    return signed_perm_matrix(w, spec.eps if spec.family != "A" else 0, field,
                              odd_orthogonal=spec.family == "B")


def signed_perm_matrix(w: Perm, eps: int, field: Field = QQ, odd_orthogonal: bool = False) -> Matrix:
    """Monomial lift of ``w`` into ``G_{eps, len(w)}`` (GL when eps = 0)."""
    if eps == 0:
        return perm_matrix(w, field)
    if eps == 1:
        if odd_orthogonal:
            p = double_middle(w)
            if top_parity(p):
                k = (p.m - 2) // 2
                swap = Perm.transposition(p.m, (k + 1, k + 2))
                return -perm_matrix(p * swap, field)
            return perm_matrix(p, field)
        return perm_matrix(w, field)
    # symplectic: g e_j = c_j e_{w(j)}, c_j = 1 on the first half
    d = w.m
    h = d // 2
    g = [[field.zero] * d for _ in range(d)]
    for j in range(1, d + 1):
        if j <= h:
            c = 1
        else:
            c = -1 if w(d + 1 - j) > h else 1
        g[w(j) - 1][j - 1] = field(c)
    return Matrix.from_rows(g, field)


# -- group membership -------------------------------------------------------

def _block_index(spec: ModelSpec):
    r, N = spec.r, spec.ambient
    return [0 if i < r else (2 if i >= N - r else 1) for i in range(N)]


def dickson_is_zero(g: Matrix) -> bool:
    """Dickson invariant vanishes: det = 1 away from 2, rank(g+1) even in char 2."""
    if g.field.characteristic == 2:
        return (g + Matrix.identity(g.rows, g.field)).rank() % 2 == 0
    return g.det() == g.field.one


def _quadratic_ok(g: Matrix) -> bool:
    d = g.rows
    m = d // 2
    red = g.field.reduce
    for i in range(d):
        if red(sum(g[k, i] * g[d - 1 - k, i] for k in range(m))):
            return False
    return True


def in_group(g: Matrix, eps: int, m: int, odd_orthogonal: bool = False) -> bool:
    """Membership in ``G_{eps, m}`` (``GL_m`` when eps = 0).

    With ``odd_orthogonal`` the matrix has size ``m + 1`` and must fix dagger.
    """
    f = g.field
    size = m + 1 if odd_orthogonal else m
    if g.shape != (size, size):
        return False
    if eps == 0:
        return size == 0 or g.det() != f.zero
    one = Matrix.identity(size, f)
    if eps == 1:
        if g.delta() @ g != one or not _quadratic_ok(g):
            return False
        if size and not dickson_is_zero(g):
            return False
        if odd_orthogonal:
            k = m // 2
            v = [f.zero] * size
            v[k], v[k + 1] = f.one, f(-1)
            dg = Matrix(size, 1, tuple(v), f)
            if g @ dg != dg:
                return False
        return True
    if f.characteristic == 2:
        raise CharacteristicError("symplectic model requires characteristic != 2")
    I = i_eps(-1, size, f)
    return I @ g.delta() @ I @ g == one


def member(g: Matrix, tag, spec: ModelSpec, field: Optional[Field] = None) -> bool:
    tag = _tag(tag)
    field = g.field if field is None else field
    if g.field != field:
        g = g.with_field(field)
    N = spec.ambient
    if g.shape != (N, N):
        raise ValueError(f"expected {N}x{N}, got {g.shape}")
    if spec.family == "C" and field.characteristic == 2:
        raise CharacteristicError("type C requires characteristic != 2")
    eps = spec.eps
    if not in_group(g, eps, spec.n, odd_orthogonal=spec.family == "B"):
        return False
    if tag.name == "G":
        return True
    blk = _block_index(spec)
    ent = lambda i, j: g[i, j]
    if tag.name == "B":
        return all(not ent(i, j) for i in range(N) for j in range(i))
    if tag.name == "T":
        return all(not ent(i, j) for i in range(N) for j in range(N) if i != j)
    if tag.name == "Bw":
        gw = weyl_matrix(tag.w, spec, field)
        c = gw.inverse() @ g @ gw
        return all(not c[i, j] for i in range(N) for j in range(i))
    # parabolic family
    if any(ent(i, j) for i in range(N) for j in range(N) if blk[i] > blk[j]):
        return False
    r = spec.r
    mid = range(r, N - r)
    B = g.submatrix(mid, mid)
    if not in_group(B, eps, spec.n - 2 * r, odd_orthogonal=spec.family == "B"):
        return False
    if tag.name == "P":
        return True
    diag_ok = not any(ent(i, j) for i in range(N) for j in range(N) if blk[i] != blk[j])
    if tag.name == "L":
        return diag_ok
    e = nilpotent_e(spec, field)
    if g @ e != e @ g:
        return False
    if tag.name == "Z":
        return True
    if tag.name == "H":
        return diag_ok and B == Matrix.identity(len(mid), field)
    raise AssertionError(tag)


# -- Lie algebras -----------------------------------------------------------

def _lie_g_equations(spec: ModelSpec, field: Field) -> list[dict]:
    return group_lie_equations(spec.family, spec.n, field)


def group_lie_equations(family: str, n: int, field: Field = QQ) -> list[dict]:
    """Linearised defining equations of G for a family and rank parameter n."""
    N = n + 1 if family == "B" else n
    eqs: list[dict] = []
    idx = lambda i, j: i * N + j
    bar = lambda i: N - 1 - i
    if family == "A":
        return eqs
    if family in "BD":
        for i in range(N):
            for j in range(N):
                a, b = idx(i, j), idx(bar(j), bar(i))
                if a == b:
                    eqs.append({a: 2})
                elif a < b:
                    eqs.append({a: 1, b: 1})
            eqs.append({idx(bar(i), i): 1})
        if family == "B":
            k = n // 2
            for i in range(N):
                eqs.append({idx(i, k): 1, idx(i, k + 1): -1})
    else:
        if field.characteristic == 2:
            raise CharacteristicError("type C requires characteristic != 2")
        s = [1] * (N // 2) + [-1] * (N // 2)
        for i in range(N):
            for j in range(N):
                a, b = idx(i, j), idx(bar(j), bar(i))
                coef = s[i] * s[j]
                eq: dict = {}
                eq[a] = eq.get(a, 0) + 1
                eq[b] = eq.get(b, 0) + coef
                eqs.append(eq)
    return eqs


def _zero_outside(N: int, keep) -> list[dict]:
    return [{i * N + j: 1} for i in range(N) for j in range(N) if not keep(i, j)]


def _commutator_equations(e: Matrix) -> list[dict]:
    # (Y e - e Y)_{ij} = sum_k Y_ik e_kj - e_ik Y_kj
    N = e.rows
    eqs = []
    for i in range(N):
        for j in range(N):
            eq: dict = {}
            for k in range(N):
                if e[k, j]:
                    eq[i * N + k] = eq.get(i * N + k, 0) + e[k, j]
                if e[i, k]:
                    eq[k * N + j] = eq.get(k * N + j, 0) - e[i, k]
            eq = {a: c for a, c in eq.items() if c}
            if eq:
                eqs.append(eq)
    return eqs


def _solve(eqs: list[dict], N: int, field: Field) -> MatSpace:
    nv = N * N
    if not eqs:
        basis = [Matrix.elementary(N, N, i, j, field) for i in range(N) for j in range(N)]
        return span(basis, (N, N), field)
    rows = []
    for eq in eqs:
        row = [field.zero] * nv
        for a, c in eq.items():
            row[a] = field.reduce(row[a] + field(c))
        rows.append(row)
    ns = nullspace(Matrix.from_rows(rows, field))
    return span([Matrix(N, N, b.entries, field) for b in ns.basis], (N, N), field)


def borel_lie(family: str, n: int, field: Field = QQ) -> MatSpace:
    """Lie algebra of the upper-triangular Borel of G for (family, n)."""
    N = n + 1 if family == "B" else n
    eqs = group_lie_equations(family, n, field) + _zero_outside(N, lambda i, j: i <= j)
    return _solve(eqs, N, field)


def lie_equations(tag, spec: ModelSpec, field: Field = QQ) -> list[dict]:
    """Linear equations (sparse dicts over flattened entries) cutting out the Lie algebra."""
    tag = _tag(tag)
    N = spec.ambient
    if spec.family == "C" and field.characteristic == 2:
        raise CharacteristicError("type C requires characteristic != 2")
    eqs = _lie_g_equations(spec, field)
    blk = _block_index(spec)
    name = tag.name
    if name == "B":
        eqs += _zero_outside(N, lambda i, j: i <= j)
    elif name == "T":
        eqs += _zero_outside(N, lambda i, j: i == j)
    elif name == "Bw":
        p = monomial_support(weyl_matrix(tag.w, spec, field))
        pinv = p.inverse()
        eqs += _zero_outside(N, lambda i, j: pinv(i + 1) <= pinv(j + 1))
    elif name == "P":
        eqs += _zero_outside(N, lambda i, j: blk[i] <= blk[j])
    elif name == "L":
        eqs += _zero_outside(N, lambda i, j: blk[i] == blk[j])
    elif name in ("Z", "H"):
        eqs += _commutator_equations(nilpotent_e(spec, field))
        if name == "H":
            eqs += _zero_outside(N, lambda i, j: blk[i] == blk[j] and blk[i] != 1)
    return eqs


def lie_basis(tag, spec: ModelSpec, field: Field = QQ) -> MatSpace:
    return _solve(lie_equations(tag, spec, field), spec.ambient, field)


def in_lie(X: Matrix, tag, spec: ModelSpec) -> bool:
    field = X.field
    for eq in lie_equations(tag, spec, field):
        if field.reduce(sum(field(c) * X.entries[a] for a, c in eq.items())):
            return False
    return True


def pattern_space(keep, N: int, field: Field = QQ) -> MatSpace:
    """Span of the matrix units E_ij with ``keep(i, j)`` (0-based)."""
    return span([Matrix.elementary(N, N, i, j, field)
                 for i in range(N) for j in range(N) if keep(i, j)], (N, N), field)


# -- Theta, varpi -------------------------------------------------------------

def _corner_blocks(g: Matrix, spec: ModelSpec):
    N, r = spec.ambient, spec.r
    A = g.submatrix(range(r), range(r))
    B = g.submatrix(range(r, N - r), range(r, N - r))
    C = g.submatrix(range(N - r, N), range(N - r, N))
    return A, B, C


def apply_theta(l: Matrix, spec: ModelSpec) -> Matrix:
    if not member(l, "L", spec):
        raise ValueError("apply_theta needs an element of L")
    A, B, C = _corner_blocks(l, spec)
    if spec.family == "A":
        return Matrix.block_diagonal([C, B, A])
    I = _corner(spec, l.field)
    return Matrix.block_diagonal([I @ C @ I, B, I @ A @ I])


def apply_varpi(z: Matrix, spec: ModelSpec) -> Matrix:
    if not member(z, "Z", spec):
        raise ValueError("apply_varpi needs an element of Z")
    A, B, C = _corner_blocks(z, spec)
    return Matrix.block_diagonal([A, Matrix.identity(B.rows, z.field), C])


def random_lie_element(space: MatSpace, rng: random.Random, bound: int = 3) -> Matrix:
    f = space.field
    N = space.ambient[0]
    X = Matrix.zeros(N, N, f)
    for b in space.basis:
        X = X + b.scale(rng.randint(-bound, bound))
    return X


def cayley(X: Matrix) -> Matrix:
    """``(1 - X)^-1 (1 + X)``; maps the quadratic-group Lie algebras into the groups."""
    one = Matrix.identity(X.rows, X.field)
    return (one - X).inverse() @ (one + X)


def random_z(spec: ModelSpec, rng: random.Random, bound: int = 3) -> Matrix:
    space = lie_basis("Z", spec)
    while True:
        X = random_lie_element(space, rng, bound).scale(Fraction(1, 2))
        try:
            z = cayley(X)
        except ZeroDivisionError:
            continue
        if z.det():
            return z


# -- characteristic two -------------------------------------------------------

def dickson(g: Matrix, m: int) -> int:
    """Dickson invariant of ``g`` in ``O_{2m}(GF(2))``: rank(g + 1) mod 2."""
    if g.field != GF(2):
        raise ValueError("dickson expects a matrix over GF(2)")
    if g.shape != (2 * m, 2 * m) or not is_orthogonal_gf2(g):
        raise ValueError("matrix is not in O_2m(GF(2))")
    return (g + Matrix.identity(2 * m, g.field)).rank() % 2


def is_orthogonal_gf2(g: Matrix) -> bool:
    return g.delta() @ g == Matrix.identity(g.rows, g.field) and _quadratic_ok(g)


def quad_form(y: Sequence[int], n: int) -> int:
    """``sum_{k <= (n+1)//2} y_k y_{n-k+1}`` over GF(2)."""
    return sum(y[k] * y[n - 1 - k] for k in range((n + 1) // 2)) % 2


def polar_form(x: Sequence[int], y: Sequence[int], n: int) -> int:
    s = [(a + b) % 2 for a, b in zip(x, y)]
    return (quad_form(s, n) - quad_form(x, n) - quad_form(y, n)) % 2


def totally_isotropic(vectors: Sequence[Sequence[int]], n: int) -> bool:
    if any(quad_form(v, n) for v in vectors):
        return False
    return not any(polar_form(a, b, n) for i, a in enumerate(vectors) for b in vectors[i + 1:])


def _power(N: Matrix, k: int) -> Matrix:
    out = Matrix.identity(N.rows, N.field)
    for _ in range(k):
        out = out @ N
    return out


def chi_sequence(N: Matrix, n: int, m_max: int) -> list[int]:
    """``chi_m = min{l : N^l(Ker N^m) totally isotropic}`` for m = 1..m_max."""
    f = N.field
    if f != GF(2):
        raise ValueError("chi_sequence expects a matrix over GF(2)")
    if N.shape != (n, n):
        raise ValueError("shape mismatch")
    if n and not _power(N, n).is_zero():
        raise ValueError("N is not nilpotent")
    out = []
    for m in range(1, m_max + 1):
        ker = [b.entries for b in nullspace(_power(N, m)).basis]
        l = 0
        while True:
            Nl = _power(N, l)
            img = [(Nl @ Matrix(n, 1, v, f)).entries for v in ker]
            img_basis = [b.entries for b in span([Matrix(n, 1, v, f) for v in img], (n, 1), f).basis]
            if totally_isotropic(img_basis, n):
                out.append(l)
                break
            l += 1
    return out
