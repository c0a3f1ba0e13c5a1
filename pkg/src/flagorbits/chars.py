"""Root data, doubled rho characters and restriction to the torus of H.

Weights are integer tuples in the standard epsilon coordinates and are kept
doubled (``2 rho``) so that everything stays integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import Matrix
from .weyl import ModelSpec

Weight = tuple


@dataclass(frozen=True)
class RootSystem:
    """A classical root system given by type letter and rank (A uses rank+1 coordinates)."""

    kind: str
    rank: int

    @property
    def dim(self) -> int:
        return self.rank + 1 if self.kind == "A" else self.rank

    def _e(self, *pairs) -> tuple:
        v = [0] * self.dim
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    def positive_roots(self) -> list[tuple]:
        k, m = self.kind, self.dim
        roots = []
        if k == "A":
            return [self._e((i, 1), (j, -1)) for i in range(m) for j in range(i + 1, m)]
        for i in range(m):
            for j in range(i + 1, m):
                roots.append(self._e((i, 1), (j, -1)))
                roots.append(self._e((i, 1), (j, 1)))
        if k == "B":
            roots += [self._e((i, 1)) for i in range(m)]
        elif k == "C":
            roots += [self._e((i, 2)) for i in range(m)]
        return roots

    def simple_roots(self) -> list[tuple]:
        k, m = self.kind, self.dim
        if self.rank == 0:
            return []
        if k == "A":
            return [self._e((i, 1), (i + 1, -1)) for i in range(m - 1)]
        out = [self._e((i, 1), (i + 1, -1)) for i in range(m - 1)]
        if k == "B":
            out.append(self._e((m - 1, 1)))
        elif k == "C":
            out.append(self._e((m - 1, 2)))
        elif m >= 2:
            out.append(self._e((m - 2, 1), (m - 1, 1)))
        return out

    def two_rho(self) -> Weight:
        acc = [0] * self.dim
        for a in self.positive_roots():
            acc = [x + y for x, y in zip(acc, a)]
        return tuple(acc)

    def two_rho_from_fundamentals(self) -> Weight:
        """Twice the sum of fundamental weights, via the inverse Cartan matrix."""
        simple = self.simple_roots()
        if not simple:
            return tuple([0] * self.dim)
        cartan = Matrix.from_rows([[pairing(a, b) for b in simple] for a in simple])
        inv = cartan.inverse()
        acc = [Fraction(0)] * self.dim
        for i in range(len(simple)):
            for k, a in enumerate(simple):
                c = inv[i, k]
                acc = [x + c * y for x, y in zip(acc, a)]
        out = [2 * x for x in acc]
        if any(x.denominator != 1 for x in out):
            raise ArithmeticError("non-integral doubled weight")
        return tuple(int(x) for x in out)

    def is_dominant(self, mu: Weight) -> bool:
        return all(pairing(mu, a) >= 0 for a in self.simple_roots())


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def pairing(mu, alpha) -> Fraction:
    """``<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha)``."""
    return Fraction(2 * _dot(mu, alpha), _dot(alpha, alpha))


def group_root_system(spec: ModelSpec) -> RootSystem:
    n = spec.n
    if spec.family == "A":
        return RootSystem("A", n - 1)
    return RootSystem(spec.family, n // 2)


def h_root_system(spec: ModelSpec) -> RootSystem:
    r = spec.r
    if spec.family == "A":
        return RootSystem("A", r - 1) if r else RootSystem("A", -1)
    if spec.eps == 1:
        return RootSystem("C", r // 2)
    return RootSystem("B", (r - 1) // 2)


def rho(group: str, spec: ModelSpec) -> Weight:
    """``2 rho`` of G or of H as an integer tuple."""
    if group == "G":
        return group_root_system(spec).two_rho()
    if group == "H":
        return h_root_system(spec).two_rho()
    raise ValueError("group must be 'G' or 'H'")


def restrict(lam: Weight, spec: ModelSpec) -> Weight:
    """Restriction of a character of T to the torus of H."""
    n, r = spec.n, spec.r
    expected = n if spec.family == "A" else n // 2
    if len(lam) != expected:
        raise ValueError(f"weight of length {len(lam)}, expected {expected}")
    if spec.family == "A":
        return tuple(lam[i] + lam[n - r + i] for i in range(r))
    k = r // 2 if spec.eps == 1 else (r - 1) // 2
    return tuple(lam[i] - lam[r - 1 - i] for i in range(k))


def dominance_character(spec: ModelSpec) -> tuple[Weight, bool]:
    """``2 rho_H - rho_G|T_H`` and whether it is dominant for H."""
    doubled = [2 * a - b for a, b in zip(rho("H", spec), restrict(rho("G", spec), spec))]
    if any(x % 2 for x in doubled):
        raise ArithmeticError("character is not integral")
    mu = tuple(x // 2 for x in doubled)
    return mu, h_root_system(spec).is_dominant(mu)


def dominant_by_inequalities(mu: Weight, system: RootSystem) -> bool:
    """Dominance read off the usual chamber inequalities."""
    if system.kind == "A":
        return all(a >= b for a, b in zip(mu, mu[1:]))
    ok = all(a >= b for a, b in zip(mu, mu[1:]))
    if not mu:
        return True
    if system.kind == "D":
        return ok and (len(mu) < 2 or mu[-2] >= -mu[-1])
    return ok and mu[-1] >= 0
