"""Command-line front end.

Exit codes: 0 solved / check passed, 2 mathematically inconsistent (or a failed
verification), 1 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .common import Inconsistent, PDependentError
from .ideals import is_p_independent_left, is_p_independent_right, minimal_poly
from .onesided import OneSidedProblem, consistency_reduce, extend_in_class, lagrange
from .oracle import RandomInstances, oracle_interpolate, poly_to_vector, seed_from_env, solution_polys
from .poly import SkewPoly, parse_poly
from .scalars import LiteralParseError, Quaternion, Rat
from .sylvester import solve_sylvester
from .twosided import TwoSidedProblem, solve_two_sided, two_sided_p_independent, within_class_redundancy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2

RINGS = {"quaternion": Quaternion, "rational": Rat}


class UsageError(Exception):
    """Bad input; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- problem files ----------------------------------------------------------------

def _parse_literal(text: Any, ring: type, where: str):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise UsageError(f"{where}: expected a literal string, got {json.dumps(text)}")
    try:
        return ring.parse(str(text))
    except LiteralParseError as exc:
        raise UsageError(f"{where}: {exc}") from None


def _parse_side(entries: Any, ring: type, side: str) -> list[tuple]:
    if entries is None:
        return []
    if not isinstance(entries, list):
        raise UsageError(f"'{side}' must be a list of {{node, value}} objects")
    out, seen = [], {}
    for n, e in enumerate(entries):
        if not isinstance(e, dict) or "node" not in e or "value" not in e:
            raise UsageError(f"{side}[{n}]: expected an object with 'node' and 'value'")
        node = _parse_literal(e["node"], ring, f"{side}[{n}].node")
        value = _parse_literal(e["value"], ring, f"{side}[{n}].value")
        if node in seen:
            raise UsageError(f"{side}[{n}].node: duplicate node {node} (first at {side}[{seen[node]}])")
        seen[node] = n
        out.append((node, value))
    return out


def load_problem(path: str) -> tuple[TwoSidedProblem, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return problem_from_data(data, path)


def problem_from_data(data: Any, path: str = "<input>") -> tuple[TwoSidedProblem, dict]:
    if not isinstance(data, dict):
        raise UsageError(f"{path}: top level must be a JSON object")
    unknown = set(data) - {"left", "right", "options", "ring"}
    if unknown:
        raise UsageError(f"{path}: unknown keys {sorted(unknown)}")
    ring_name = data.get("ring", "quaternion")
    if ring_name not in RINGS:
        raise UsageError(f"{path}: ring must be one of {sorted(RINGS)}")
    ring = RINGS[ring_name]
    left = _parse_side(data.get("left"), ring, "left")
    right = _parse_side(data.get("right"), ring, "right")
    options = data.get("options") or {}
    if not isinstance(options, dict):
        raise UsageError(f"{path}: 'options' must be an object")
    params = options.get("parameters", [])
    if not isinstance(params, list):
        raise UsageError(f"{path}: options.parameters must be a list of rationals")
    parsed = []
    for n, p in enumerate(params):
        try:
            if isinstance(p, bool) or isinstance(p, float):
                raise ValueError
            parsed.append(Fraction(p))
        except (ValueError, TypeError):
            raise UsageError(f"{path}: options.parameters[{n}] is not an exact rational") from None
    opts = {"reduce": bool(options.get("reduce", False)), "parameters": parsed, "ring": ring}
    return TwoSidedProblem(tuple(left), tuple(right)), opts


# -- reports ----------------------------------------------------------------------

def _poly_report(f: SkewPoly) -> dict:
    return {"polynomial": str(f), "coefficients": f.to_json(),
            "degree": None if not f else f.degree}


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {json.dumps(item) if isinstance(item, dict) else item}")
        elif isinstance(value, dict):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {'null' if value is None else value}")


def _key_report(key) -> dict:
    return {"trace": str(key[0]), "norm": str(key[1])}


def _forced_report(problem: TwoSidedProblem) -> list[dict]:
    return [{"side": r.side, "index": r.index, "class": _key_report(r.class_key),
             "prescribed": str(r.prescribed), "forced": str(r.forced), "consistent": r.consistent}
            for r in within_class_redundancy(problem)]


def _reduce_side(problem: TwoSidedProblem, side: str, allow: bool):
    """Return (conditions kept, kept indices) or an Inconsistent for one side."""
    conds = problem.left if side == "left" else problem.right
    nodes = [a for a, _ in conds]
    independent = is_p_independent_left(nodes) if side == "left" else is_p_independent_right(nodes)
    if independent:
        return list(conds), list(range(len(conds)))
    if not allow:
        raise UsageError(f"{side} node set is not P-independent; run with --reduce to pass to a P-basis "
                         "(or set options.reduce)")
    res = consistency_reduce(OneSidedProblem(side, conds))
    if isinstance(res, Inconsistent):
        return Inconsistent({"side": side, "index": res.witness}, res.reason)
    return list(res.problem.conditions), list(res.basis_indices)


def _choose_side(problem: TwoSidedProblem, side: str) -> str:
    if side == "auto":
        if problem.left and problem.right:
            return "two"
        return "right" if problem.right else "left"
    if side == "left" and problem.right:
        raise UsageError("--side left given but the file has right conditions")
    if side == "right" and problem.left:
        raise UsageError("--side right given but the file has left conditions")
    return side


def _verify_or_die(problem: TwoSidedProblem, f: SkewPoly, basis: Sequence[SkewPoly]) -> None:
    if not problem.is_solved_by(f):
        raise RuntimeError("internal error: computed polynomial fails its own conditions")
    homogeneous = TwoSidedProblem(tuple((a, a.zero()) for a, _ in problem.left),
                                  tuple((b, b.zero()) for b, _ in problem.right))
    for g in basis:
        if not homogeneous.is_solved_by(g):
            raise RuntimeError("internal error: homogeneous basis element fails the homogeneous conditions")


def cmd_interp(args) -> int:
    problem, opts = load_problem(args.file)
    allow_reduce = args.reduce or opts["reduce"]
    side = _choose_side(problem, args.side)
    report: dict[str, Any] = {"status": None, "side": side}
    witnesses: list = []

    parts = {}
    for s in ("left", "right"):
        res = _reduce_side(problem, s, allow_reduce)
        if isinstance(res, Inconsistent):
            witnesses.append(res.witness)
            report.update({"status": "inconsistent", "polynomial": None, "coefficients": None, "degree": None,
                           "homogeneous_basis": [], "forced_conditions": [], "witnesses": witnesses,
                           "reason": res.reason})
            _emit(report, args.format)
            return EXIT_INCONSISTENT
        parts[s] = res
    (left, lkeep), (right, rkeep) = parts["left"], parts["right"]
    reduced = TwoSidedProblem(tuple(left), tuple(right))
    if len(lkeep) != len(problem.left) or len(rkeep) != len(problem.right):
        report["reduced"] = {"left": lkeep, "right": rkeep}

    basis: list[SkewPoly] = []
    forced = _forced_report(reduced) if side in ("two", "generalized") else []
    if side in ("left", "right"):
        f = lagrange(OneSidedProblem(side, left if side == "left" else right))
        if opts["parameters"]:
            raise UsageError("options.parameters apply only to two-sided problems")
    else:
        if side == "two":
            fam = solve_two_sided(reduced)
        else:
            from .bounded import generalized_family
            fam = generalized_family(reduced)
        if isinstance(fam, Inconsistent):
            w = fam.witness
            if isinstance(w, tuple) and len(w) == 2 and all(isinstance(x, int) for x in w):
                witnesses.append({"left": lkeep[w[0]], "right": rkeep[w[1]]})
            else:
                witnesses.append({"class": _key_report(w)})
            report.update({"status": "inconsistent", "polynomial": None, "coefficients": None, "degree": None,
                           "homogeneous_basis": [], "forced_conditions": forced, "witnesses": witnesses,
                           "reason": fam.reason})
            _emit(report, args.format)
            return EXIT_INCONSISTENT
        basis = list(fam.homogeneous_basis)
        if len(opts["parameters"]) > len(basis):
            raise UsageError(f"options.parameters has {len(opts['parameters'])} entries but the homogeneous "
                             f"basis has {len(basis)} elements")
        f = fam.member(opts["parameters"])
    _verify_or_die(problem, f, basis)
    report["status"] = "solved"
    report.update(_poly_report(f))
    report["homogeneous_basis"] = [str(g) for g in basis]
    report["forced_conditions"] = forced
    report["witnesses"] = witnesses
    if args.degree_bound is not None:
        if args.degree_bound < 0:
            raise UsageError("--degree-bound must be nonnegative")
        sol = oracle_interpolate(problem, args.degree_bound)
        report["oracle"] = {"degree_bound": args.degree_bound, "consistent": not sol.is_empty,
                            "dimension": sol.dimension}
    _emit(report, args.format)
    return EXIT_OK


def _ring_from_flag(name: str) -> type:
    return RINGS[name]


def _literal_args(values: Sequence[str], ring: type, what: str) -> list:
    return [_parse_literal(v, ring, f"{what}[{n}]") for n, v in enumerate(values)]


def cmd_minpoly(args) -> int:
    ring = _ring_from_flag(args.ring)
    nodes = _literal_args(args.nodes, ring, "node")
    try:
        res = minimal_poly(nodes, args.side, ring)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = str(res.poly.to_central()) if res.poly.is_central() else str(res.poly)
    _emit({"polynomial": text, "coefficients": res.poly.to_json(), "degree": res.degree,
           "basis_indices": list(res.basis_indices), "independent": res.degree == len(nodes)}, args.format)
    return EXIT_OK


def cmd_independent(args) -> int:
    ring = _ring_from_flag(args.ring)
    nodes = _literal_args(args.nodes, ring, "node")
    if args.against is not None:
        other = _literal_args(args.against, ring, "against")
        result = two_sided_p_independent(nodes, other)
        report = {"independent": result, "mode": "two-sided"}
    else:
        result = is_p_independent_left(nodes) if args.side == "left" else is_p_independent_right(nodes)
        report = {"independent": result, "mode": args.side}
    _emit(report, args.format)
    return EXIT_OK


def cmd_sylvester(args) -> int:
    ring = _ring_from_flag(args.ring)
    a, b, g = _literal_args([args.a, args.b, args.g], ring, "argument")
    sol = solve_sylvester(a, b, g).canonical()
    _emit({"status": sol.status.value,
           "particular": None if sol.particular is None else str(sol.particular),
           "basis": [str(v) for v in sol.basis]}, args.format)
    return EXIT_OK if sol.solvable else EXIT_INCONSISTENT


def cmd_extend(args) -> int:
    ring = _ring_from_flag(args.ring)
    nodes, values = [], []
    for n, pair in enumerate(args.pairs):
        if "=" not in pair:
            raise UsageError(f"pair[{n}]: expected NODE=VALUE, got {pair!r}")
        node, value = pair.split("=", 1)
        nodes.append(_parse_literal(node, ring, f"pair[{n}].node"))
        values.append(_parse_literal(value, ring, f"pair[{n}].value"))
    target = _parse_literal(args.target, ring, "target")
    try:
        value = extend_in_class(nodes, values, target, side=args.side, basis_side=args.basis_side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"target": str(target), "side": args.side, "value": str(value)}, args.format)
    return EXIT_OK


def _parse_poly_arg(text: str, ring: type) -> SkewPoly:
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"polynomial: invalid JSON at column {exc.colno}: {exc.msg}") from None
        if not isinstance(data, list):
            raise UsageError("polynomial: JSON form must be an array of literals")
        return SkewPoly([_parse_literal(x, ring, f"polynomial[{n}]") for n, x in enumerate(data)], ring)
    try:
        return parse_poly(text, ring)
    except LiteralParseError as exc:
        raise UsageError(f"polynomial: {exc}") from None


def cmd_verify(args) -> int:
    problem, opts = load_problem(args.file)
    f = _parse_poly_arg(args.poly, opts["ring"])
    left, right = problem.residuals(f)
    failures = [{"side": "left", "index": n, "residual": str(r)} for n, r in enumerate(left) if r]
    failures += [{"side": "right", "index": n, "residual": str(r)} for n, r in enumerate(right) if r]
    report = {"status": "pass" if not failures else "fail",
              "polynomial": str(f),
              "residuals": {"left": [str(r) for r in left], "right": [str(r) for r in right]},
              "failures": failures}
    _emit(report, args.format)
    return EXIT_OK if not failures else EXIT_INCONSISTENT


def _oracle_report(problem: TwoSidedProblem, bound: int, ring: type) -> dict:
    sol = oracle_interpolate(problem, bound)
    particular, basis = solution_polys(sol, ring)
    return {"degree_bound": bound, "consistent": not sol.is_empty, "dimension": sol.dimension,
            "particular": None if particular is None else str(particular),
            "nullspace_basis": [str(g) for g in basis]}


def cmd_oracle(args) -> int:
    if args.random:
        seed = args.seed if args.seed is not None else seed_from_env()
        gen = RandomInstances(seed, height=5)
        n = gen.randint(1, 3)
        k = gen.randint(0, 3 - (n > 2))
        f = gen.poly(n + k - 1, height=5)
        lam = gen.independent_set(n, "left")
        om = gen.independent_set(k, "right") if k else []
        problem = TwoSidedProblem(tuple((a, f.eval_left(a)) for a in lam),
                                  tuple((b, f.eval_right(b)) for b in om))
        ring = Quaternion
        bound = args.degree_bound if args.degree_bound is not None else n + k
        report = {"seed": seed,
                  "left": [{"node": str(a), "value": str(c)} for a, c in problem.left],
                  "right": [{"node": str(b), "value": str(d)} for b, d in problem.right]}
        report.update(_oracle_report(problem, bound, ring))
        fam = solve_two_sided(problem)
        agrees = None
        if bound == n + k and not isinstance(fam, Inconsistent):
            agrees = report["dimension"] == sum(len(a.intertwiners(b)) for a in lam for b in om) \
                and _oracle_contains(problem, bound, fam.base)
        report["closed_form_agrees"] = agrees
        _emit(report, args.format)
        return EXIT_OK if agrees is not False else EXIT_INCONSISTENT
    if not args.file:
        raise UsageError("oracle needs a problem FILE or --random")
    problem, opts = load_problem(args.file)
    bound = args.degree_bound if args.degree_bound is not None else problem.size
    if bound < 0:
        raise UsageError("--degree-bound must be nonnegative")
    report = _oracle_report(problem, bound, opts["ring"])
    _emit(report, args.format)
    return EXIT_OK if report["consistent"] else EXIT_INCONSISTENT


def _oracle_contains(problem: TwoSidedProblem, bound: int, f: SkewPoly) -> bool:
    return oracle_interpolate(problem, bound).contains(poly_to_vector(f, bound))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skewlagrange",
                     description="Exact Lagrange interpolation over the rational quaternions.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, ring=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if ring:
            p.add_argument("--ring", choices=sorted(RINGS), default="quaternion")

    p = sub.add_parser("interp", help="solve an interpolation problem file")
    p.add_argument("file")
    p.add_argument("--side", choices=("auto", "left", "right", "two", "generalized"), default="auto")
    p.add_argument("--reduce", action="store_true", help="pass dependent node sets to a P-basis")
    p.add_argument("--degree-bound", type=int, default=None,
                   help="also report the oracle solution space among polynomials of degree < N")
    common(p, ring=False)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("minpoly", help="minimal polynomial of a node set")
    p.add_argument("nodes", nargs="*")
    p.add_argument("--side", choices=("left", "right"), default="left")
    common(p)
    p.set_defaults(func=cmd_minpoly)

    p = sub.add_parser("independent", help="P-independence test")
    p.add_argument("nodes", nargs="*")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--against", nargs="*", default=None, help="right nodes for the two-sided test")
    common(p)
    p.set_defaults(func=cmd_independent)

    p = sub.add_parser("sylvester", help="solve a*x - x*b = g")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("g")
    common(p)
    p.set_defaults(func=cmd_sylvester)

    p = sub.add_parser("extend", help="value at a class member from P-basis data")
    p.add_argument("pairs", nargs="+", help="NODE=VALUE pairs forming a P-basis of one class")
    p.add_argument("--target", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left", help="which value to compute")
    p.add_argument("--basis-side", choices=("left", "right"), default="left",
                   help="whether the given values are left or right values")
    common(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="check a polynomial against a problem file")
    p.add_argument("poly")
    p.add_argument("file")
    common(p, ring=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force linear-algebra solution")
    p.add_argument("file", nargs="?")
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--random", action="store_true", help="generate a seeded random instance instead")
    p.add_argument("--seed", type=int, default=None)
    common(p, ring=False)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PDependentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
