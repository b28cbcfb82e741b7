"""Command-line front end: ``gentle <subcommand> QUIVER [flags]``.

Exit codes: 0 success, 1 domain error (message printed verbatim), 2 usage.
JSON output always carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import homalg, rank, semiinv, stability, updown
from .errors import GentleError, ShapeError
from .exact import parse_rational
from .exact.poly import MultiPoly
from .quiver import GentleAlgebra, euler_form, ext_dimensions, parse_quiver
from .representation import Representation, direct_sum

SCHEMA = 1


class UsageError(Exception):
    pass


# flag grammar --------------------------------------------------------------------


def _pairs(text: str | None, flag: str) -> list:
    if not text:
        return []
    out = []
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise UsageError(f"{flag}: expected key=value, got {item!r}")
        out.append((key.strip(), value.strip()))
    return out


def parse_ints(text: str | None, flag: str) -> dict:
    try:
        return {k: int(v) for k, v in _pairs(text, flag)}
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def parse_rationals(text: str | None, flag: str) -> dict:
    try:
        return {k: parse_rational(v) for k, v in _pairs(text, flag)}
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def parse_eps(text: str | None) -> dict | None:
    if not text:
        return None
    out = {}
    for key, value in _pairs(text, "--eps"):
        vertex, sep, color = key.partition(":")
        if not sep or value not in ("+1", "1", "-1"):
            raise UsageError(f"--eps: expected VERTEX:COLOR=+1|-1, got {key}={value}")
        out[(vertex, color)] = 1 if value in ("+1", "1") else -1
    return out


def parse_list(text: str | None, flag: str) -> list:
    if not text:
        return []
    try:
        return [parse_rational(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


# helpers ---------------------------------------------------------------------------


def q(x) -> str:
    return str(Fraction(x))


def load(path: str) -> GentleAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_quiver(text)


def need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def module_from_args(A, args, suffix: str = "") -> Representation:
    """An up-and-down module from --dim/--rank/--lambda (or their 2-suffixed twins)."""
    dim = getattr(args, "dim" + suffix) or args.dim
    rk = getattr(args, "rank" + suffix) or args.rank
    lam = (getattr(args, "lambda_" + suffix) if suffix else None) or args.lambda_
    if dim is None:
        raise UsageError(f"{args.command} needs --dim")
    d = A.vector(parse_ints(dim, "--dim"))
    r = rank_for(A, d, rk, args.command)
    lambdas = parse_rationals(lam, "--lambda") if lam is not None else None
    return updown.updown_module(A, d, r, parse_eps(args.eps), lambdas=lambdas)


def rank_for(A, d: dict, text: str | None, command: str) -> dict:
    """--rank if given, else the regular rank function of d."""
    if text is not None:
        return A.arrow_vector(parse_ints(text, "--rank"))
    r = rank.regular_rank_function(A, d)
    if r is None:
        raise UsageError(f"--rank is required for {command}: d has no regular rank function")
    return r


def dr(A, args) -> tuple[dict, dict]:
    need(args, "dim")
    d = A.vector(parse_ints(args.dim, "--dim"))
    return d, rank_for(A, d, args.rank, args.command)


def matrix_text(m) -> list:
    return [[str(x) for x in row] for row in m.entries]


def emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print("\n".join(lines))


# subcommands -----------------------------------------------------------------------


def cmd_validate(A, args):
    payload = {
        "valid": True,
        "name": A.quiver.name,
        "vertices": list(A.vertices),
        "arrows": [a.name for a in A.arrows],
        "colors": list(A.quiver.colors),
        "relations": [list(p) for p in A.relations],
    }
    rels = ", ".join(f"{b}*{a}" for a, b in A.relations) or "none"
    emit(args, payload, [
        f"{A.quiver.name}: gentle, {len(A.vertices)} vertices, {len(A.arrows)} arrows, "
        f"{len(A.quiver.colors)} colors",
        f"relations: {rels}",
    ])


def cmd_components(A, args):
    need(args, "dim")
    d = A.vector(parse_ints(args.dim, "--dim"))
    rows = []
    for r in rank.maximal_rank_functions(A, d):
        rows.append({"rank": r, "regular": rank.is_regular(A, d, r)})
    lines = [f"{len(rows)} maximal rank function(s) for d = {d}"]
    for row in rows:
        flag = "regular" if row["regular"] else "-"
        lines.append("  " + " ".join(f"{a}={v}" for a, v in row["rank"].items()) + f"  [{flag}]")
    emit(args, {"dim": d, "components": rows}, lines)


def cmd_decompose(A, args):
    d, r = dr(A, args)
    dec = updown.generic_decomposition(A, d, r, parse_eps(args.eps))
    comps = [{"kind": e.kind, "word": e.word_text, "dim": e.dim, "rank": e.rank,
              "multiplicity": e.multiplicity} for e in dec.entries]
    payload = {"components": comps, "trdeg": dec.transcendence_degree()}
    if dec.collisions:
        payload["collisions"] = [list(c) for c in dec.collisions]
    lines = []
    for c in comps:
        dims = " ".join(f"{v}:{n}" for v, n in c["dim"].items() if n)
        lines.append(f"{c['kind']:6} x{c['multiplicity']}  {c['word']}   dim {dims}")
    lines.append(f"trdeg {payload['trdeg']}")
    emit(args, payload, lines)


def cmd_module(A, args):
    M = module_from_args(A, args)
    maps = {a.name: matrix_text(M.maps[a.name]) for a in A.arrows}
    lines = [f"dim {M.dims}"]
    for a in A.arrows:
        lines.append(f"{a.name}: {M.maps[a.name]}")
    emit(args, {"dims": M.dims, "variables": list(M.variables()), "maps": maps}, lines)


def cmd_euler(A, args):
    need(args, "dim")
    d = A.vector(parse_ints(args.dim, "--dim"))
    e = A.vector(parse_ints(args.dim2, "--dim2")) if args.dim2 else d
    value = euler_form(A, d, e)
    payload = {"d": d, "e": e, "value": value, "ext_layers": len(ext_dimensions(A))}
    lines = [f"<<d, e>> = {value}"]
    if args.check:
        from .generate import random_representation

        rng = random.Random(args.seed)
        agree = tried = 0
        for _ in range(args.check):
            X = random_representation(A, d, rng)
            if not homalg.pdim_at_most_one(X):
                continue
            N = random_representation(A, e, rng)
            tried += 1
            agree += homalg.hom_dim(X, N) - homalg.ext1_dim(X, N) == value
        payload["check"] = {"seed": args.seed, "pdim_le_1": tried, "agree": agree}
        lines.append(f"hom - ext agrees on {agree}/{tried} random pairs with pdim X <= 1 (seed {args.seed})")
    emit(args, payload, lines)


def _two_modules(A, args):
    return module_from_args(A, args), module_from_args(A, args, "2")


def cmd_hom(A, args):
    M, N = _two_modules(A, args)
    value = homalg.hom_dim(M, N)
    emit(args, {"hom": value}, [f"dim Hom(M, N) = {value}"])


def cmd_ext(A, args):
    M, N = _two_modules(A, args)
    value = homalg.ext1_dim(M, N)
    emit(args, {"ext1": value}, [f"dim Ext^1(M, N) = {value}"])


def _presentation_payload(pres) -> dict:
    return {
        "p0": list(pres.p0),
        "p1": list(pres.p1),
        "weight": pres.weight(),
        "minimal": pres.minimal,
        "entries": [
            {"p1": s, "p0": u, "terms": [[str(c), str(p)] for c, p in terms]}
            for (s, u), terms in sorted(pres.entries.items())
        ],
    }


def cmd_presentation(A, args):
    d, r = dr(A, args)
    eps = parse_eps(args.eps)
    if rank.is_regular(A, d, r) and not args.minimal:
        lambdas = parse_rationals(args.lambda_, "--lambda") if args.lambda_ else None
        pres = homalg.band_presentation(A, d, r, eps, lambdas=lambdas)
        kind = "band"
    else:
        M = module_from_args(A, args)
        pres = homalg.minimal_presentation(M)
        kind = "minimal"
    payload = {"kind": kind, **_presentation_payload(pres)}
    lines = [f"{kind} presentation  P0 = {' + '.join('P' + v for v in pres.p0) or '0'}"
             f"  P1 = {' + '.join('P' + v for v in pres.p1) or '0'}",
             f"weight {pres.weight()}"] + pres.describe()
    emit(args, payload, lines)


def cmd_semiinvariant(A, args):
    d, r = dr(A, args)
    eps = parse_eps(args.eps)
    pres = homalg.band_presentation(A, d, r, eps, lambdas={"b1": MultiPoly.var(semiinv.LAMBDA)})
    payload: dict = {"weight": pres.weight()}
    lines = [f"weight {pres.weight()}"]
    det = semiinv.band_pair_determinant(A, d, r, eps=eps)
    try:
        ex = semiinv.band_exponents(A, d, r, eps)
        payload["exponents"] = {"p": ex.p, "l": ex.l, "unit": q(ex.unit)}
        lines.append(f"exponents p={ex.p} l={ex.l} unit={ex.unit}")
    except ShapeError as exc:
        payload["exponents"] = None
        lines.append(f"exponents: {exc}")
    assignment = {}
    if args.lambda_:
        assignment[semiinv.LAMBDA] = parse_rationals(args.lambda_, "--lambda").get("b1")
    if args.mu:
        assignment[semiinv.MU] = parse_rational(args.mu)
    value = det.subs({k: v for k, v in assignment.items() if v is not None})
    payload["value"] = str(value)
    lines.append(f"c(lambda, mu) = {value}")
    grid = parse_list(args.ratios, "--ratios")
    if grid:
        if args.mu is None:
            raise UsageError("--ratios needs --mu")
        mu = parse_rational(args.mu)
        values = [det.evaluate({semiinv.LAMBDA: g, semiinv.MU: mu}) for g in grid]
        ratios = []
        for a, b in zip(values, values[1:]):
            if b == 0:
                raise GentleError("a grid value equals mu; the ratio is undefined")
            ratios.append(a / b)
        payload["ratios"] = [q(x) for x in ratios]
        lines.append("ratios " + " ".join(q(x) for x in ratios))
    emit(args, payload, lines)


def cmd_stability(A, args):
    d, r = dr(A, args)
    eps = parse_eps(args.eps)
    M = module_from_args(A, args)
    if args.copies > 1:
        M = direct_sum(*[M] * args.copies)
    if args.theta:
        theta = A.vector(parse_ints(args.theta, "--theta"), kind="weight", nonnegative=False)
    else:
        theta = homalg.band_presentation(A, d, r, eps).weight()
    budget = int(os.environ.get("GENTLE_BUDGET", stability.DefaultBudget))
    cert = stability.stability_of(M, theta, p=args.prime, budget=budget)
    payload = {**cert.to_json(), "revalidated": stability.revalidate(cert)}
    lines = [f"{cert.verdict} for theta {theta} ({cert.scope}, p = {cert.prime})",
             f"{len(cert.realized)} submodule dimension vectors"]
    if cert.witness:
        lines.append(f"witness {cert.witness}")
    emit(args, payload, lines)


COMMANDS = {
    "validate": (cmd_validate, "check the gentle axioms"),
    "components": (cmd_components, "maximal rank functions and regularity"),
    "decompose": (cmd_decompose, "generic decomposition and transcendence degree"),
    "module": (cmd_module, "matrices of the up-and-down module"),
    "euler": (cmd_euler, "Euler form <<d, e>>"),
    "hom": (cmd_hom, "dim Hom between two up-and-down modules"),
    "ext": (cmd_ext, "dim Ext^1 between two up-and-down modules"),
    "presentation": (cmd_presentation, "projective presentation"),
    "semiinvariant": (cmd_semiinvariant, "Schofield weight, exponents and values"),
    "stability": (cmd_stability, "King stability certificate over F_p"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gentle", description="Exact computations for triangular gentle algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("quiver", help="quiver file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--dim", help="dimension vector v=n,...")
        p.add_argument("--rank", help="rank function a=n,... (default: the regular one)")
        p.add_argument("--lambda", dest="lambda_", help="band parameters b1=p/q,...")
        p.add_argument("--eps", help="sign function VERTEX:COLOR=+1|-1,...")
        if name in ("hom", "ext"):
            p.add_argument("--dim2", help="dimension vector of N (default: --dim)")
            p.add_argument("--rank2", help="rank function of N (default: --rank)")
            p.add_argument("--lambda2", dest="lambda_2", help="band parameters of N (default: --lambda)")
        if name == "euler":
            p.add_argument("--dim2", help="second dimension vector (default: --dim)")
            p.add_argument("--check", type=int, default=0, help="compare with hom - ext on N random pairs")
            p.add_argument("--seed", type=int, default=0)
        if name == "presentation":
            p.add_argument("--minimal", action="store_true", help="minimal presentation of the specialized module")
        if name == "semiinvariant":
            p.add_argument("--mu", help="parameter of the evaluated module")
            p.add_argument("--ratios", help="lambda grid; prints consecutive value ratios at --mu")
        if name == "stability":
            p.add_argument("--theta", help="weight v=n,... (default: the band presentation weight)")
            p.add_argument("--prime", type=int, default=5)
            p.add_argument("--copies", type=int, default=1, help="take the direct sum of this many copies")
    return parser


def main(argv: list | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        A = load(args.quiver)
        COMMANDS[args.command][0](A, args)
    except UsageError as exc:
        print(f"gentle: usage error: {exc}", file=sys.stderr)
        return 2
    except GentleError as exc:
        print(f"gentle: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
