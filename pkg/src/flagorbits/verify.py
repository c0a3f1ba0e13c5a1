"""The acceptance checks, one function per criterion.

Each ``criterion_k`` returns a :class:`CriterionResult`; ``run_all`` runs the
whole list.  Exhaustive sweeps over Weyl groups can be spread across worker
processes with ``threads``; results are collected in input order so output
never depends on the worker count.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .chars import dominance_character, dominant_by_inequalities, h_root_system
from .counterex import verify_noncontinuity
from .exactla import GF, QQ, Matrix
from .models import chi_sequence, dickson, lie_basis, perm_matrix
from .orbits import count_orbits, hook_component_count, hook_factor
from .resolve import (DEFAULT_SEED, alternative_holds, check_conditions, dim_orbit_oracle,
                      dim_quotients, find_sigma, fix_representative, formula_codim)
from .tableaux import TwoColTableau, enumerate_tableaux, tableau_to_w
from .weyl import (ModelSpec, Perm, check_of, coxeter_length, inversions, iter_perms,
                   longest_element, type_length, weyl_group)

RESOLVE_SPECS = (("A", 4, 1), ("A", 5, 2), ("B", 5, 2), ("D", 6, 2))
PRIMES = (3, 5, 7, 11)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "failures": self.failures[:20]}


def _timed(number, name):
    def deco(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            passed, detail, failures = fn(*args, **kwargs)
            return CriterionResult(number, name, passed, detail, time.perf_counter() - t0, failures)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


def _sweep(fn, items, threads: int = 1) -> list:
    items = list(items)
    if threads <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


# -- 1 ---------------------------------------------------------------------------

@_timed(1, "orbit count = components x factor")
def criterion_1(n_max: int = 10):
    bad = []
    checked = 0
    for n in range(1, n_max + 1):
        for r in range(n // 2 + 1):
            spec = ModelSpec("A", n, r)
            lhs = count_orbits(spec)
            rhs = hook_component_count(n, r) * hook_factor(n, r)
            checked += 1
            if lhs != rhs:
                bad.append(f"(A,{n},{r}): {lhs} != {rhs}")
    return not bad, f"{checked} pairs (n<={n_max})", bad


# -- 2 ---------------------------------------------------------------------------

GOLDEN = (
    (5, (2, 4), "3 1 4 2 5"),
    (6, (2, 4), "4 1 5 2 6 3"),
    (7, (2, 4, 5), "4 1 5 2 3 7 6"),
)


@_timed(2, "tableau words")
def criterion_2(n_max: int = 9):
    bad = []
    for n, p, w in GOLDEN:
        got = tableau_to_w(TwoColTableau(n, p)).w
        if got != Perm.parse(w):
            bad.append(f"n={n} p={p}: {got} != {w}")
    count = 0
    for n in range(1, n_max + 1):
        for r in range(n // 2 + 1):
            spec = ModelSpec("A", n, r)
            seen = set()
            for t in enumerate_tableaux(n, r):
                w = tableau_to_w(t).w
                count += 1
                if inversions(w) != comb(n - r, 2):
                    bad.append(f"length of w for {t.p} in n={n}")
                if check_conditions(w, spec) != (True, True):
                    bad.append(f"conditions fail for {t.p} in n={n}")
                seen.add(w)
            if len(seen) != hook_component_count(n, r):
                bad.append(f"words not distinct for ({n},{r})")
    return not bad, f"3 golden words, {count} tableaux (n<={n_max})", bad


# -- 3, 4 ------------------------------------------------------------------------

def _codim_one(args):
    w, spec = args
    return dim_orbit_oracle(w, spec)[2] == formula_codim(w, spec)


def _hyp1_one(args):
    v, spec = args
    _, w = fix_representative(v, spec)
    ok = dim_orbit_oracle(w, spec)[2] == type_length(w, spec) + dim_quotients(spec)[1]
    return ok, check_conditions(w, spec) == (True, True)


@_timed(3, "codimension formula for all w")
def criterion_3(specs=RESOLVE_SPECS, threads: int = 1):
    bad, total = [], 0
    for s in specs:
        spec = ModelSpec(*s)
        ws = weyl_group(spec)
        res = _sweep(_codim_one, [(w, spec) for w in ws], threads)
        total += len(ws)
        bad += [f"{spec} w={w}" for w, ok in zip(ws, res) if not ok]
    return not bad, f"{total} elements over {len(specs)} specs", bad


@_timed(4, "corrected representatives")
def criterion_4(specs=RESOLVE_SPECS, threads: int = 1):
    bad, total = [], 0
    for s in specs:
        spec = ModelSpec(*s)
        vs = weyl_group(spec)
        res = _sweep(_hyp1_one, [(v, spec) for v in vs], threads)
        total += len(vs)
        for v, (h1, cond) in zip(vs, res):
            if not h1:
                bad.append(f"{spec} v={v}: codim != l(w) + dim H/B_H")
            if not cond:
                bad.append(f"{spec} v={v}: conditions (a),(b)")
    return not bad, f"{total} elements over {len(specs)} specs", bad


# -- 5 ---------------------------------------------------------------------------

@_timed(5, "type length vs Coxeter length")
def criterion_5(d_max: int = 8):
    bad, total = [], 0
    for eps in (1, -1):
        for d in range(1, d_max + 1):
            if eps == -1 and d % 2:
                continue
            for u in weyl_group((eps, d)):
                total += 1
                if type_length(u, (eps, d)) != coxeter_length(u, (eps, d)):
                    bad.append(f"({eps},{d}) {u}")
    for d in range(2, d_max + 1):
        m = d // 2
        cases = []
        if d % 2:
            cases.append(("B", 1, m * m))
        else:
            cases += [("C", -1, m * m), ("D", 1, m * m - m)]
        for name, eps, want in cases:
            got = type_length(longest_element((eps, d)), (eps, d))
            if got != want:
                bad.append(f"longest {name}{m} (d={d}): {got} != {want}")
    return not bad, f"{total} elements (d<={d_max})", bad


# -- 6 ---------------------------------------------------------------------------

def _mixed_pairs(v: Perm) -> int:
    d = v.m
    bar = lambda i: d + 1 - i
    return sum(1 for i in range(1, d + 1) for j in range(i + 1, d + 1)
               if v(i) > v(j) and v(bar(i)) < v(bar(j)))


@_timed(6, "permutation lemma")
def criterion_6(d_max: int = 6, sigma_max: int = 5):
    bad, total = [], 0
    for d in range(1, d_max + 1):
        for v in iter_perms(d):
            total += 1
            lhs = inversions(check_of(v) * v.inverse())
            if lhs != 2 * inversions(v) - 2 * _mixed_pairs(v):
                bad.append(f"unconditional formula at {v}")
            if alternative_holds(v) and lhs != 2 * inversions(v):
                bad.append(f"conditional identity at {v}")
            if d <= sigma_max:
                s = find_sigma(v)
                if check_of(s) != s or not alternative_holds(v * s):
                    bad.append(f"find_sigma at {v}")
    return not bad, f"{total} permutations (d<={d_max})", bad


# -- 7 ---------------------------------------------------------------------------

def _specs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        for r in range(n // 2 + 1):
            for fam in "ABCD":
                try:
                    yield ModelSpec(fam, n, r)
                except ValueError:
                    continue


@_timed(7, "rho characters")
def criterion_7(n_max: int = 10):
    bad, total = [], 0
    for spec in _specs_up_to(n_max):
        total += 1
        mu, dom = dominance_character(spec)
        if dom != dominant_by_inequalities(mu, h_root_system(spec)):
            bad.append(f"{spec}: dominance tests disagree")
        fam, r = spec.family, spec.r
        if fam == "A":
            ok = mu == (0,) * r and dom
        elif fam in "BD":
            ok = mu == (1,) * (r // 2) and dom
        else:
            k = (r - 1) // 2
            # r = 1 leaves a rank-zero H: the empty weight, trivially dominant
            ok = mu == (-1,) * k and dom == (k == 0)
        if not ok:
            bad.append(f"{spec}: {mu}, dominant={dom}")
    return not bad, f"{total} specs (n<={n_max})", bad


# -- 8 ---------------------------------------------------------------------------

@_timed(8, "non-continuity example")
def criterion_8():
    rep = verify_noncontinuity()
    bad = [k for k, v in rep.checks.items() if not v]
    return rep.ok, f"{len(rep.checks)} checks", bad


# -- 9 ---------------------------------------------------------------------------

F2 = GF(2)


def _invertible_gf2(s: int, limit: int, rng: random.Random) -> list[Matrix]:
    """All of GL_s(2) when small, otherwise a seeded sample."""
    out = []
    if s <= 3:
        for bits in itertools.product((0, 1), repeat=s * s):
            m = Matrix(s, s, bits, F2)
            if m.rank() == s:
                out.append(m)
        return out
    while len(out) < limit:
        m = Matrix(s, s, tuple(rng.randint(0, 1) for _ in range(s * s)), F2)
        if m.rank() == s:
            out.append(m)
    return out


def order_two_nilpotents(n: int, rng: random.Random, per_rank: int = 24) -> list[tuple[int, Matrix]]:
    """Square-zero N of rank s with isotropic image, from corner blocks.

    N sends the last s basis vectors onto the first s through an invertible
    block; conjugating by a mirror-symmetric permutation keeps the quadratic
    form, so those conjugates are included as well.
    """
    out = []
    mirror = [p for p in weyl_group((1, n))] if n else []
    for s in range(1, n // 2 + 1):
        for J in _invertible_gf2(s, per_rank, rng):
            rows = [[0] * n for _ in range(n)]
            for i in range(s):
                for j in range(s):
                    rows[i][n - s + j] = J[i, j]
            N = Matrix.from_rows(rows, F2)
            out.append((s, N))
            for p in rng.sample(mirror, min(3, len(mirror))):
                P = perm_matrix(p, F2)
                out.append((s, P @ N @ P.T))
    return out


def expected_chi(n: int, s: int, m_max: int) -> list[int]:
    return [0 if 2 * s == n else 1] + [1] * (m_max - 1)


def orthogonal_group_gf2(m: int) -> list[Matrix]:
    """All of O_2m(GF(2)) for the split form, by brute force (m <= 2)."""
    n = 2 * m
    from .models import is_orthogonal_gf2
    out = []
    for bits in itertools.product((0, 1), repeat=n * n):
        g = Matrix(n, n, bits, F2)
        if is_orthogonal_gf2(g):
            out.append(g)
    return out


def _reflection(v: tuple, n: int) -> Matrix:
    from .models import polar_form
    cols = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        c = polar_form(e, v, n)
        cols.append(tuple((a + c * b) % 2 for a, b in zip(e, v)))
    return Matrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)], F2)


def random_orthogonal_gf2(m: int, rng: random.Random, length: int = 6) -> Matrix:
    """Product of random orthogonal reflections x -> x + b(x, v) v with Q(v) = 1."""
    from .models import quad_form
    n = 2 * m
    anis = [v for v in itertools.product((0, 1), repeat=n) if quad_form(v, n) == 1]
    g = Matrix.identity(n, F2)
    for _ in range(rng.randint(0, length)):
        g = g @ _reflection(rng.choice(anis), n)
    return g


@_timed(9, "characteristic two")
def criterion_9(n_max: int = 8, pairs: int = 200, seed: int = DEFAULT_SEED):
    rng = random.Random(seed)
    bad, total = [], 0
    for n in range(2, n_max + 1):
        m_max = 3
        for s, N in order_two_nilpotents(n, rng):
            total += 1
            got = chi_sequence(N, n, m_max)
            if got != expected_chi(n, s, m_max):
                bad.append(f"n={n} rank={s}: chi={got}")
    o4 = orthogonal_group_gf2(2)
    groups = {2: lambda: rng.choice(o4), 3: lambda: random_orthogonal_gf2(3, rng)}
    for m, draw in groups.items():
        for _ in range(pairs):
            g, h = draw(), draw()
            if dickson(g @ h, m) != dickson(g, m) ^ dickson(h, m):
                bad.append(f"O_{2 * m}: Dickson not additive")
    return not bad, f"{total} nilpotents, {2 * pairs} Dickson pairs (|O4(2)|={len(o4)})", bad


# -- 10 --------------------------------------------------------------------------

def lie_dim_specs() -> list[ModelSpec]:
    specs = [ModelSpec("A", n, r) for n in range(1, 7) for r in range(n // 2 + 1)]
    return specs + [ModelSpec("B", 5, 2), ModelSpec("D", 6, 2)]


@_timed(10, "Lie dimensions across fields")
def criterion_10(seed: int = DEFAULT_SEED, bw_samples: int = 3):
    rng = random.Random(seed)
    bad, total = [], 0
    for spec in lie_dim_specs():
        W = weyl_group(spec)
        tags = ["G", "B", "Z", "H"] + [("Bw", w) for w in rng.sample(W, min(bw_samples, len(W)))]
        for tag in tags:
            q = lie_basis(tag, spec, QQ).dim
            for p in PRIMES:
                total += 1
                got = lie_basis(tag, spec, GF(p)).dim
                if got != q:
                    bad.append(f"{spec} {tag} over GF({p}): {got} != {q}")
    return not bad, f"{total} comparisons", bad


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)


def run_all(threads: int = 1, seed: int = DEFAULT_SEED) -> list[CriterionResult]:
    out = []
    for fn in CRITERIA:
        if fn in (criterion_3, criterion_4):
            out.append(fn(threads=threads))
        elif fn in (criterion_9, criterion_10):
            out.append(fn(seed=seed))
        else:
            out.append(fn())
    return out
