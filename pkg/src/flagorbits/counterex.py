"""An explicit failure of continuity for the Lagrangian-valued map on flags.

Setting: ``V = Q^8`` with basis ``f_1..f_8``, the split symmetric form
``omega(f_i, f_j) = [i + j == 9]`` and a nilpotent ``N`` in its Lie algebra
with ``N^2 = 0`` and rank 4.  For an isotropic flag ``F`` put

    phi(F) = sum_{i=1..3} F_i  cap  N(F_i^perp),

a subspace of ``Im N``.  A one-parameter family ``U(t) w F`` inside a single
centraliser orbit has constant ``phi`` but converges to ``s F`` where ``phi``
takes a different value.

Vectors are column matrices; subspaces are :class:`MatSpace` objects so
equality is equality of canonical bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import QQ, MatSpace, Matrix, intersect, nullspace, span
from .weyl import Perm

DIM = 8
HALF = 4
PARAM_SAMPLES = (Fraction(1), Fraction(2), Fraction(-3), Fraction(7, 5), Fraction(-1, 11))


def basis_vector(i: int) -> Matrix:
    return Matrix.elementary(DIM, 1, i - 1, 0)


def omega_matrix() -> Matrix:
    return Matrix.from_rows([[1 if i + j == DIM + 1 else 0 for j in range(1, DIM + 1)]
                             for i in range(1, DIM + 1)])


def omega(x: Matrix, y: Matrix):
    return (x.T @ omega_matrix() @ y)[0, 0]


def nilpotent() -> Matrix:
    """N f_{4+i} = f_i for i = 1, 2 and -f_i for i = 3, 4; N kills f_1..f_4."""
    rows = [[0] * DIM for _ in range(DIM)]
    for i in range(1, HALF + 1):
        rows[i - 1][HALF + i - 1] = 1 if i <= HALF // 2 else -1
    return Matrix.from_rows(rows)


def unipotent(t) -> Matrix:
    """U(t) = 1 + t E_{3,5} - t E_{4,6}."""
    t = Fraction(t)
    return (Matrix.identity(DIM) + Matrix.elementary(DIM, DIM, 2, 4).scale(t)
            - Matrix.elementary(DIM, DIM, 3, 5).scale(t))


W_PERM = Perm.parse("1 5 2 6 3 7 4 8")
S_PERM = Perm.parse("1 3 2 4 5 7 6 8")


@dataclass(frozen=True)
class Flag:
    """A full flag, stored as its members F_1 < ... < F_{DIM-1}."""

    members: tuple

    @classmethod
    def from_vectors(cls, vecs) -> Flag:
        vecs = list(vecs)
        members = tuple(span(vecs[:i], (DIM, 1)) for i in range(1, DIM))
        for i, m in enumerate(members, 1):
            if m.dim != i:
                raise ValueError(f"vectors do not give a flag (member {i} has dim {m.dim})")
        return cls(members)

    def __getitem__(self, i: int) -> MatSpace:
        return self.members[i - 1]

    def transform(self, g: Matrix) -> Flag:
        return Flag(tuple(span([g @ b for b in m.basis], (DIM, 1)) for m in self.members))

    def is_isotropic(self) -> bool:
        return all(perp(self[i]) == self[DIM - i] for i in range(1, DIM))


def perm_flag(p: Perm) -> Flag:
    """The flag p F with p acting by f_i -> f_{p(i)}."""
    return Flag.from_vectors(basis_vector(p(i)) for i in range(1, DIM + 1))


def perp(space: MatSpace) -> MatSpace:
    if space.dim == 0:
        return span([basis_vector(i) for i in range(1, DIM + 1)], (DIM, 1))
    eqs = Matrix.from_rows([list((b.T @ omega_matrix()).entries) for b in space.basis])
    return nullspace(eqs)


def image(g: Matrix, space: MatSpace) -> MatSpace:
    return span([g @ b for b in space.basis], (DIM, 1))


def phi(flag: Flag, N: Matrix | None = None) -> MatSpace:
    N = nilpotent() if N is None else N
    total = MatSpace((DIM, 1), ())
    for i in range(1, HALF):
        total = total + intersect(flag[i], image(N, perp(flag[i])))
    return total


def alpha(x: Matrix, y: Matrix, N: Matrix | None = None):
    """The form on Im N given by alpha(N u, N v) = omega(u, N v)."""
    N = nilpotent() if N is None else N
    pre = _preimage(N, x)
    return omega(pre, y)


def _preimage(N: Matrix, x: Matrix) -> Matrix:
    aug = Matrix.from_rows([list(N.row_list()[i]) + [-x[i, 0]] for i in range(DIM)])
    for sol in nullspace(aug).basis:
        if sol[DIM, 0]:
            c = sol[DIM, 0]
            return Matrix(DIM, 1, tuple(sol[i, 0] / c for i in range(DIM)), QQ)
    raise ValueError("vector is not in the image of N")


def is_alpha_lagrangian(space: MatSpace, N: Matrix | None = None) -> bool:
    N = nilpotent() if N is None else N
    if space.dim != HALF // 2 or not image(N, _full()).contains_space(space):
        return False
    b = space.basis
    return all(alpha(x, y, N) == 0 for x in b for y in b)


def _full() -> MatSpace:
    return span([basis_vector(i) for i in range(1, DIM + 1)], (DIM, 1))


def _rewritten(s) -> list[Matrix]:
    """Basis of U(t) w F written with the parameter s = 1/t."""
    f = basis_vector
    return [f(1), f(3) + f(5).scale(s), f(2), f(4) - f(6).scale(s),
            f(3), f(7), f(4), f(8)]


@dataclass
class CounterexampleReport:
    checks: dict = field(default_factory=dict)
    phi_w: tuple = ()
    phi_s: tuple = ()

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": dict(self.checks),
                "phi_wF": [list(map(str, v)) for v in self.phi_w],
                "phi_sF": [list(map(str, v)) for v in self.phi_s]}


def _commutes(a: Matrix, b: Matrix) -> bool:
    return (a @ b - b @ a).is_zero()


def _preserves_omega(g: Matrix) -> bool:
    om = omega_matrix()
    return (g.T @ om @ g - om).is_zero()


def verify_noncontinuity(samples=PARAM_SAMPLES) -> CounterexampleReport:
    rep = CounterexampleReport()
    c = rep.checks
    N, om = nilpotent(), omega_matrix()
    c["N^2 = 0"] = (N @ N).is_zero()
    c["rank N = 4"] = N.rank() == HALF
    c["N skew for omega"] = (N.T @ om + om @ N).is_zero()
    for t in samples:
        U = unipotent(t)
        c[f"U({t}) preserves omega"] = _preserves_omega(U)
        c[f"U({t}) commutes with N"] = _commutes(U, N)

    F0 = perm_flag(Perm.identity(DIM))
    wF, sF = perm_flag(W_PERM), perm_flag(S_PERM)
    c["F, wF, sF isotropic"] = F0.is_isotropic() and wF.is_isotropic() and sF.is_isotropic()

    pw, ps = phi(wF, N), phi(sF, N)
    e = basis_vector
    c["phi(wF) = <f1,f2>"] = pw == span([e(1), e(2)], (DIM, 1))
    c["phi(sF) = <f1,f3>"] = ps == span([e(1), e(3)], (DIM, 1))
    c["phi(wF) != phi(sF)"] = pw != ps
    c["phi values alpha-Lagrangian"] = is_alpha_lagrangian(pw, N) and is_alpha_lagrangian(ps, N)
    for t in samples:
        moved = wF.transform(unipotent(t))
        c[f"U({t})wF isotropic"] = moved.is_isotropic()
        c[f"U({t})wF rewritten with 1/t"] = moved == Flag.from_vectors(_rewritten(1 / t))
        c[f"phi(U({t})wF) = phi(wF)"] = phi(moved, N) == pw

    # setting 1/t = 0 in the first members; the rest follow by taking perps
    lim = _rewritten(Fraction(0))
    low = [span(lim[:i], (DIM, 1)) for i in range(1, HALF)]
    c["limit members keep their dimension"] = [m.dim for m in low] == [1, 2, 3]
    c["limit is sF"] = all(low[i - 1] == sF[i] for i in range(1, HALF)) and all(
        perp(low[i - 1]) == sF[DIM - i] for i in range(1, HALF))
    rep.phi_w = tuple(b.entries for b in pw.basis)
    rep.phi_s = tuple(b.entries for b in ps.basis)
    return rep
