"""Two-column standard tableaux and their Weyl group elements.

A tableau with ``n`` boxes and a second column of length ``r`` is stored by
its second column ``p_1 < ... < p_r``.  Entries decrease along rows and down
columns, so the first column is the complement of ``p`` read downwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .weyl import Perm, inversions


@dataclass(frozen=True)
class TwoColTableau:
    n: int
    p: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        if not is_valid(self.n, self.p):
            raise ValueError(f"not a standard two-column tableau: n={self.n}, p={self.p}")

    @property
    def r(self) -> int:
        return len(self.p)

    @property
    def first_column(self) -> tuple:
        return tuple(sorted(set(range(1, self.n + 1)) - set(self.p), reverse=True))

    @property
    def separated(self) -> bool:
        return all(b > a + 1 for a, b in zip(self.p, self.p[1:]))

    def render(self) -> str:
        c, p = self.first_column, sorted(self.p, reverse=True)
        width = len(str(self.n))
        lines = []
        for i, x in enumerate(c):
            right = f" {str(p[i]).rjust(width)}" if i < len(p) else ""
            lines.append(str(x).rjust(width) + right)
        return "\n".join(lines)


@dataclass(frozen=True)
class TableauWord:
    q: tuple
    s: tuple
    w: Perm


def is_valid(n: int, p) -> bool:
    p = tuple(p)
    r = len(p)
    if r > n // 2 or any(a >= b for a, b in zip(p, p[1:])):
        return False
    if any(not 1 <= x <= n for x in p):
        return False
    col = sorted(set(range(1, n + 1)) - set(p), reverse=True)
    return all(col[j] > p[r - 1 - j] for j in range(r))


def enumerate_tableaux(n: int, r: int) -> list[TwoColTableau]:
    if not 0 <= r <= n // 2:
        raise ValueError("need r <= n/2")
    return [TwoColTableau(n, p) for p in itertools.combinations(range(1, n + 1), r)
            if is_valid(n, p)]


def tableau_to_w(t: TwoColTableau) -> TableauWord:
    n, p, r = t.n, t.p, t.r
    q = [0] * r
    used = set()
    for i in range(r - 1, -1, -1):
        if i == r - 1:
            q[i] = p[i] + 1
        else:
            q[i] = min(set(range(p[i] + 1, n + 1)) - used)
        used |= {p[i], q[i]}
    s = sorted(set(range(1, n + 1)) - set(p) - set(q))
    img = [0] * n
    for i in range(r):
        img[p[i] - 1] = i + 1
        img[q[i] - 1] = n - r + i + 1
    for j, x in enumerate(s, 1):
        img[x - 1] = n - r + 1 - j
    return TableauWord(tuple(q), tuple(s), Perm(tuple(img)))


def tableau_dims(t: TwoColTableau) -> tuple[int, int]:
    """(dim H/B_H, length of w) = (C(r,2), C(n-r,2)), checked against the word."""
    dims = (comb(t.r, 2), comb(t.n - t.r, 2))
    if inversions(tableau_to_w(t).w) != dims[1]:
        raise ArithmeticError(f"length mismatch for {t}")
    return dims
