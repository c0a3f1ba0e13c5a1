"""Command line front end.

Every subcommand prints one JSON document (default) or TSV to stdout.  Exit
status: 0 when every check passed, 1 when a verification failed, 2 on bad
usage (unknown family, malformed permutation, violated model constraints).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import chars, counterex, models, orbits, resolve, tableaux, verify, weyl
from .exactla import GF, QQ, matrix_from_json
from .weyl import ModelSpec, Perm

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- output -----------------------------------------------------------------------

def _cell(v: Any) -> str:
    if isinstance(v, (dict, list, tuple)):
        return json.dumps(v, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def to_tsv(obj: Any) -> str:
    """Tables (lists of flat dicts) become header + rows; dicts become key/value lines."""
    if isinstance(obj, dict) and "rows" in obj and isinstance(obj["rows"], list):
        head = [f"# {k}\t{_cell(v)}" for k, v in obj.items() if k != "rows"]
        return "\n".join(head + [to_tsv(obj["rows"])]) if obj["rows"] else "\n".join(head)
    if isinstance(obj, list) and obj and all(isinstance(r, dict) for r in obj):
        keys = list(obj[0])
        lines = ["\t".join(keys)]
        lines += ["\t".join(_cell(r.get(k)) for k in keys) for r in obj]
        return "\n".join(lines)
    if isinstance(obj, dict):
        return "\n".join(f"{k}\t{_cell(v)}" for k, v in obj.items())
    return _cell(obj)


def emit(obj: Any, fmt: str) -> None:
    if fmt == "tsv":
        print(to_tsv(obj))
    else:
        print(json.dumps(obj, indent=2, default=str))


# -- argument helpers -----------------------------------------------------------

def _perm(text: str, label: str = "--perm") -> Perm:
    try:
        return Perm.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed permutation for {label}: {text!r} ({exc})") from None


def _family(text: str) -> str:
    fam = text.upper()
    if fam not in weyl.FAMILIES:
        raise UsageError(f"unknown family {text!r}; expected one of A, B, C, D")
    return fam


def _spec(args) -> ModelSpec:
    fam = _family(args.family)
    try:
        return ModelSpec(fam, args.n, args.r)
    except ValueError as exc:
        raise UsageError(f"invalid model ({fam}, n={args.n}, r={args.r}): {exc}") from None


def _raw(args) -> tuple[int, int]:
    fam = _family(args.family)
    eps = {"A": 0, "B": 1, "D": 1, "C": -1}[fam]
    n = args.n
    if (fam == "B" and n % 2 == 0) or (fam in "CD" and n % 2):
        raise UsageError(f"family {fam} needs {'odd' if fam == 'B' else 'even'} n, got {n}")
    return eps, n


def _field(args):
    if args.field == "q":
        return QQ
    if args.p is None:
        raise UsageError("--field fp needs --p <prime>")
    try:
        return GF(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _matrix(text: str, field):
    try:
        return matrix_from_json(json.loads(text), field)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed matrix: {exc}") from None


def _in_w(p: Perm, raw) -> Perm:
    if not weyl.in_weyl(p, raw):
        raise UsageError(f"{p} is not in W{raw}")
    return p


# -- weyl -------------------------------------------------------------------------

def cmd_weyl_len(args):
    raw = _raw(args)
    p = _in_w(_perm(args.perm), raw)
    return {"perm": str(p), "inversions": weyl.inversions(p),
            "length": weyl.type_length(p, raw)}, True


def cmd_weyl_check(args):
    raw = _raw(args)
    p = _perm(args.perm)
    return {"perm": str(p), "in_weyl": weyl.in_weyl(p, raw), "check": str(weyl.check_of(p))}, True


def cmd_weyl_decompose(args):
    spec = _spec(args)
    w = _in_w(_perm(args.perm), spec)
    tau, nu = weyl.coset_decompose(w, spec)
    lengths = [weyl.type_length(x, spec) for x in (w, tau, nu)]
    return {"w": str(w), "tau": str(tau), "nu": str(nu), "len_w": lengths[0],
            "len_tau": lengths[1], "len_nu": lengths[2],
            "additive": lengths[0] == lengths[1] + lengths[2]}, True


def cmd_weyl_bruhat(args):
    raw = _raw(args)
    u = _in_w(_perm(args.u, "--u"), raw)
    w = _in_w(_perm(args.w, "--w"), raw)
    return {"u": str(u), "w": str(w), "leq": weyl.bruhat_leq(u, w, raw)}, True


# -- models -----------------------------------------------------------------------

def _tag(text: str):
    try:
        return models.GroupTag.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_models_lie_dim(args):
    spec, field = _spec(args), _field(args)
    names = args.tag or list(models.TAGS)
    rows = [{"tag": t, "dim": models.lie_basis(_tag(t), spec, field).dim} for t in names]
    return {"spec": str(spec), "field": repr(field), "rows": rows}, True


def cmd_models_member(args):
    spec, field = _spec(args), _field(args)
    g = _matrix(args.matrix, field)
    ok = models.member(g, _tag(args.tag), spec, field)
    return {"tag": args.tag, "member": ok}, True


def cmd_models_chi(args):
    N = _matrix(args.matrix, GF(2))
    seq = models.chi_sequence(N, N.rows, args.m_max)
    return {"n": N.rows, "chi": seq}, True


def cmd_models_dickson(args):
    g = _matrix(args.matrix, GF(2))
    if g.rows % 2:
        raise UsageError("Dickson invariant needs an even size matrix")
    try:
        return {"dickson": models.dickson(g, g.rows // 2)}, True
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- orbits -----------------------------------------------------------------------

def cmd_orbits_count(args):
    spec = _spec(args)
    if spec.family != "A":
        return {"count": orbits.count_orbits(spec)}, True
    count = orbits.count_orbits(spec)
    comp = orbits.hook_component_count(spec.n, spec.r)
    factor = orbits.hook_factor(spec.n, spec.r)
    ok = count == comp * factor
    return {"count": count, "components": comp, "factor": factor, "identity_holds": ok}, ok


def cmd_orbits_enumerate_wp(args):
    spec = _spec(args)
    reps = orbits.enumerate_WP(spec)
    return {"spec": str(spec), "size": len(reps),
            "rows": [{"v": str(v), "length": weyl.type_length(v, spec)} for v in reps]}, True


def cmd_orbits_classify(args):
    spec = _spec(args)
    if args.matrix:
        x = _matrix(args.matrix, QQ)
        if x.shape != (spec.r, spec.r) or x.rank() != spec.r:
            raise UsageError(f"need an invertible {spec.r}x{spec.r} matrix")
        return {"u": str(orbits.classify_orbit_u(x, spec))}, True
    rows = []
    for prm in orbits.orbit_params(spec):
        t = orbits.t_fixed_rep(prm, spec)
        rows.append({"u": str(prm.u), "v": str(prm.v), "t_fixed": None if t is None else str(t)})
    return {"spec": str(spec), "count": len(rows), "rows": rows}, True


# -- resolve ----------------------------------------------------------------------

def _resolve_row(item):
    v, spec, seed = item
    rep = resolve.hypothesis_report(v, spec, seed=seed)
    return {"v": rep.v, "w": rep.w, "len_w": rep.len_w, "conditions": list(rep.conditions),
            "hypotheses": rep.hypotheses, "ok": rep.ok}


def cmd_resolve(args):
    spec = _spec(args)
    if args.action == "exhaustive":
        items = [(v, spec, args.seed) for v in weyl.weyl_group(spec)]
        rows = verify._sweep(_resolve_row, items, args.threads)
        ok = all(r["ok"] for r in rows)
        return {"spec": str(spec), "total": len(rows), "passed": sum(r["ok"] for r in rows),
                "rows": rows}, ok
    if not args.v:
        raise UsageError("resolve one needs --v")
    v = _in_w(_perm(args.v, "--v"), spec)
    u = _perm(args.u, "--u") if args.u else None
    try:
        rep = resolve.hypothesis_report(v, spec, u=u, seed=args.seed)
    except resolve.PreconditionError as exc:
        raise UsageError(str(exc)) from None
    return rep.to_dict(), rep.ok


# -- chars / tableau / counterexample -------------------------------------------------

def cmd_chars_dominance(args):
    spec = _spec(args)
    mu, dom = chars.dominance_character(spec)
    return {"weight": list(mu), "dominant": dom}, True


def cmd_chars_rho(args):
    spec = _spec(args)
    return {"two_rho_G": list(chars.rho("G", spec)), "two_rho_H": list(chars.rho("H", spec)),
            "restricted": list(chars.restrict(chars.rho("G", spec), spec))}, True


def _tableau_payload(t: tableaux.TwoColTableau) -> dict:
    word = tableaux.tableau_to_w(t)
    return {"p": list(t.p), "q": list(word.q), "s": list(word.s), "w": str(word.w),
            "dims": list(tableaux.tableau_dims(t)), "separated": t.separated}


def cmd_tableau_enumerate(args):
    try:
        ts = tableaux.enumerate_tableaux(args.n, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.pretty:
        for t in ts:
            print(t.render(), end="\n\n", file=sys.stderr)
    rows = [_tableau_payload(t) for t in ts]
    for r in rows:
        r["p"], r["q"], r["s"], r["dims"] = (" ".join(map(str, r[k])) for k in ("p", "q", "s", "dims"))
    return {"n": args.n, "r": args.r, "count": len(rows), "rows": rows}, True


def cmd_tableau_to_w(args):
    try:
        cols = tuple(int(x) for x in args.cols.split())
        t = tableaux.TwoColTableau(args.n, cols)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.pretty:
        print(t.render(), file=sys.stderr)
    return _tableau_payload(t), True


def _describe(vec) -> str:
    terms = []
    for i, c in enumerate(vec, 1):
        if c:
            terms.append(f"f{i}" if c == 1 else f"{c}*f{i}")
    return " + ".join(terms) or "0"


def cmd_counterexample(args):
    rep = counterex.verify_noncontinuity()
    fam = [_describe(v) for v in rep.phi_w]
    lim = [_describe(v) for v in rep.phi_s]
    return {"family_phi": fam, "limit_flag_equal": rep.checks["limit is sF"],
            "phi_limit": lim, "discontinuous": rep.ok and fam != lim,
            "checks": rep.checks}, rep.ok


# -- verify -----------------------------------------------------------------------

def cmd_verify_dim_formula(args):
    spec = _spec(args)
    if args.perm:
        ws = [_in_w(_perm(args.perm), spec)]
    elif args.exhaustive:
        ws = list(weyl.weyl_group(spec))
    else:
        import random
        W = weyl.weyl_group(spec)
        ws = sorted(random.Random(args.seed).sample(W, min(20, len(W))))
    rows = []
    for w in ws:
        oracle = resolve.dim_orbit_oracle(w, spec)[2]
        formula = resolve.formula_codim(w, spec)
        rows.append({"w": str(w), "oracle": oracle, "formula": formula, "pass": oracle == formula})
    ok = all(r["pass"] for r in rows)
    return {"spec": str(spec), "total": len(rows), "passed": sum(r["pass"] for r in rows),
            "rows": rows}, ok


def _results(results) -> tuple[dict, bool]:
    for r in results:
        print(r.line(), file=sys.stderr)
    rows = [r.to_dict() for r in results]
    for row in rows:
        row["failures"] = "; ".join(row["failures"])
    return {"rows": rows}, all(r.passed for r in results)


def cmd_verify_lengths(args):
    return _results([verify.criterion_5(args.d_max)])


def cmd_verify_smoothness_dims(args):
    return _results([verify.criterion_10(seed=args.seed)])


def cmd_verify_all(args):
    return _results(verify.run_all(threads=args.threads, seed=args.seed))


# -- parser -----------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int, default=resolve.DEFAULT_SEED,
                   help=f"RNG seed for sampled checks (default {resolve.DEFAULT_SEED})")
    p.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    p.add_argument("--field", choices=("q", "fp"), default="q")
    p.add_argument("--p", type=int, default=None, help="prime for --field fp")


def _model(p, need_r: bool = True):
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    if need_r:
        p.add_argument("--r", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagorbits",
                                     description="Orbit combinatorics on flag varieties.")
    top = parser.add_subparsers(dest="command", required=True)

    def leaf(sub, name, fn, help_=None, r=True, model=True):
        p = sub.add_parser(name, help=help_)
        if model:
            _model(p, r)
        _common(p)
        p.set_defaults(func=fn)
        return p

    w = top.add_parser("weyl", help="Weyl group combinatorics").add_subparsers(dest="sub", required=True)
    leaf(w, "len", cmd_weyl_len, "inversions and type length", r=False).add_argument("--perm", required=True)
    leaf(w, "check", cmd_weyl_check, "membership test", r=False).add_argument("--perm", required=True)
    leaf(w, "decompose", cmd_weyl_decompose, "w = tau nu").add_argument("--perm", required=True)
    b = leaf(w, "bruhat", cmd_weyl_bruhat, "Bruhat comparison u <= w", r=False)
    b.add_argument("--u", required=True)
    b.add_argument("--w", required=True)

    m = top.add_parser("models", help="matrix models").add_subparsers(dest="sub", required=True)
    leaf(m, "lie-dim", cmd_models_lie_dim, "Lie algebra dimensions").add_argument(
        "--tag", action="append", help="G, B, T, P, L, Z, H or Bw:<perm>; repeatable")
    mem = leaf(m, "member", cmd_models_member, "group membership")
    mem.add_argument("--tag", required=True)
    mem.add_argument("--matrix", required=True, help="JSON list of rows")
    chi = leaf(m, "chi", cmd_models_chi, "chi sequence over GF(2)", model=False)
    chi.add_argument("--matrix", required=True)
    chi.add_argument("--m-max", type=int, default=3)
    leaf(m, "dickson", cmd_models_dickson, "Dickson invariant over GF(2)",
         model=False).add_argument("--matrix", required=True)

    o = top.add_parser("orbits", help="orbit parametrisation").add_subparsers(dest="sub", required=True)
    leaf(o, "count", cmd_orbits_count, "number of orbits")
    leaf(o, "enumerate-wp", cmd_orbits_enumerate_wp, "minimal coset representatives")
    leaf(o, "classify", cmd_orbits_classify, "orbit parameters").add_argument(
        "--matrix", help="invertible r x r matrix to classify")

    rp = top.add_parser("resolve", help="corrected representatives and hypotheses")
    rp.add_argument("action", nargs="?", choices=("one", "exhaustive"), default="one")
    _model(rp)
    _common(rp)
    rp.add_argument("--v")
    rp.add_argument("--u", help="orbit parameter (type C caveat check)")
    rp.set_defaults(func=cmd_resolve)

    c = top.add_parser("chars", help="rho characters").add_subparsers(dest="sub", required=True)
    leaf(c, "dominance", cmd_chars_dominance, "2 rho_H - rho_G restricted")
    leaf(c, "rho", cmd_chars_rho, "doubled rho vectors")

    t = top.add_parser("tableau", help="two-column tableaux").add_subparsers(dest="sub", required=True)
    te = leaf(t, "enumerate", cmd_tableau_enumerate, "all tableaux", model=False)
    te.add_argument("--n", type=int, required=True)
    te.add_argument("--r", type=int, required=True)
    te.add_argument("--pretty", action="store_true", help="draw diagrams on stderr")
    tw = leaf(t, "to-w", cmd_tableau_to_w, "Weyl element of a tableau", model=False)
    tw.add_argument("--n", type=int, required=True)
    tw.add_argument("--cols", required=True, help='second column, e.g. "2 4"')
    tw.add_argument("--pretty", action="store_true")

    ce = top.add_parser("counterexample", help="non-continuity example")
    _common(ce)
    ce.set_defaults(func=cmd_counterexample)

    v = top.add_parser("verify", help="acceptance checks").add_subparsers(dest="sub", required=True)
    df = leaf(v, "dim-formula", cmd_verify_dim_formula, "oracle vs codimension formula")
    df.add_argument("--exhaustive", action="store_true")
    df.add_argument("--perm")
    leaf(v, "lengths", cmd_verify_lengths, "length cross-check", model=False).add_argument(
        "--d-max", type=int, default=8)
    leaf(v, "smoothness-dims", cmd_verify_smoothness_dims, "Lie dims across fields", model=False)
    leaf(v, "all", cmd_verify_all, "every acceptance criterion", model=False).add_argument(
        "--small", action="store_true", help="the default small-size suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload, ok = args.func(args)
    except (UsageError, ValueError) as exc:
        # ValueError here comes from input validation inside the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(payload, args.format)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
