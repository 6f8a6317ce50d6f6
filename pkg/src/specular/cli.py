"""Command-line interface: ``specular <command> <action> [options]``."""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from pathlib import Path

from . import dot, fixtures
from .bifix import (
    BifixCode,
    CodingMorphism,
    coset_automaton,
    decode,
    degree,
    even_code,
    incidence_graph,
    kernel,
    layer_code,
    maximality,
    symmetric_completion,
)
from .core import FactorSet, HorizonError, SpecularError, invert
from .generate import doubling_image, fixed_point_factors
from .group import (
    build_subgroup,
    even_subgroup_graph,
    index,
    kurosh_type,
    prime_words,
    schreier_basis,
)
from .involution import LinearInvolution, find_connection, natural_coding
from .palindrome import fullness, g_fullness, transducer_group
from .returns import complete_return_set, mixed_returns
from .structure import classify, complexity, extension_graph, parity
from .verify import FAIL, INSUFFICIENT, SUITES, run_suite

DEFAULT_HORIZON = 10


class UsageError(Exception):
    pass


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _split_words(items) -> list[str]:
    out = []
    for item in items or []:
        out.extend(t for t in re.split(r"[,\s]+", item) if t)
    return out


# factor set sources


def load_factor_set(args) -> FactorSet:
    L = args.horizon
    if getattr(args, "set", None):
        S = FactorSet.from_json(_read_json(args.set))
        return S.truncate(L) if L is not None and L < S.max_len else S
    if getattr(args, "spec", None) and args.command in ("gen", "analyze", "bifix", "returns", "palindrome"):
        data = _read_json(args.spec)
        if "top" in data:
            return natural_coding(LinearInvolution.from_json(data), L or DEFAULT_HORIZON)
        m, seed = fixtures.load_morphism(data)
        base = fixed_point_factors(m, seed, L or DEFAULT_HORIZON)
        if getattr(args, "transducer", None):
            return doubling_image(fixtures.load_transducer(_read_json(args.transducer)), base)
        return base
    if args.fixture:
        fx = _fixture(args.fixture)
        if fx.kind == "group":
            raise UsageError(f"fixture {fx.name!r} is a subgroup, not a factor set")
        return fx.factor_set(L)
    raise UsageError("no input: give --fixture, --set or --spec")


def _fixture(name: str):
    try:
        return fixtures.load(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


# commands


def cmd_gen(args) -> int:
    S = load_factor_set(args)
    if args.json or args.action == "json":
        print(_dump(S.to_json()))
    else:
        A = S.alphabet
        for n in range(S.max_len + 1):
            words = [A.format(w) or "ε" for w in S.of_length(n)]
            print(f"{n:>3} {len(words):>4}  {' '.join(words)}")
    return 0


def cmd_involution(args) -> int:
    if args.spec:
        T = LinearInvolution.from_json(_read_json(args.spec))
    elif args.fixture:
        T = _fixture(args.fixture).involution()
    else:
        raise UsageError("no involution: give --spec or --fixture")
    if args.action == "connection":
        hit = find_connection(T, args.steps)
        if hit is None:
            payload = {"connection": None, "steps": args.steps}
            text = f"no connection found <= {args.steps}"
        else:
            x, y, n = hit
            payload = {"connection": {"x": [str(x.x), x.component], "y": [str(y.x), y.component], "n": n}}
            text = f"connection {x} -> {y} in {n} steps"
        print(_dump(payload) if args.json else text)
        return 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        S = natural_coding(T, args.horizon or DEFAULT_HORIZON, connection_horizon=args.steps)
    args.json = True
    print(_dump(S.to_json()))
    return 0


def cmd_analyze(args) -> int:
    S = load_factor_set(args)
    A = S.alphabet
    if args.action == "graph":
        w = A.parse(args.word) if args.word else ()
        g = extension_graph(S, w)
        if args.dot:
            print(dot.extension_graph_dot(g, A), end="")
            return 0
        payload = {
            "word": A.format(w),
            "left": [A.names[a] for a in sorted(g.left)],
            "right": [A.names[a] for a in sorted(g.right)],
            "edges": [[A.names[a], A.names[b]] for a, b in sorted(g.edges)],
            "multiplicity": g.multiplicity,
            "acyclic": g.is_acyclic(),
            "components": len(g.components()),
        }
    elif args.action == "complexity":
        payload = complexity(S).to_json()
    elif args.action == "parity":
        P = parity(S)
        if args.dot:
            print(dot.parity_graph_dot(P, A), end="")
            return 0
        payload = {
            "edges": [[i, A.names[a], j] for i, a, j in P.edges],
            "even": [A.names[a] for a in P.even_letters()],
            "odd": [A.names[a] for a in P.odd_letters()],
        }
    else:
        payload = classify(S).to_json()
    _emit(args, payload)
    return 0


def _emit(args, payload) -> None:
    if args.json:
        print(_dump(payload))
        return
    for key, value in payload.items():
        if isinstance(value, list):
            value = " ".join(str(v) if not isinstance(v, list) else "(" + " ".join(map(str, v)) + ")" for v in value)
        print(f"{key}: {value}")


def _code(args, S: FactorSet) -> BifixCode:
    if args.layer:
        return layer_code(S, args.layer)
    words = _split_words(args.code)
    if not words:
        if args.action in ("evencode", "decode"):
            return even_code(S)
        raise UsageError("give --code or --layer")
    X = BifixCode.parse(S.alphabet, words)
    if args.symmetric:
        X = BifixCode(S.alphabet, X.words | {invert(x, S.alphabet) for x in X.words})
    return X


def cmd_bifix(args) -> int:
    S = load_factor_set(args)
    A = S.alphabet
    if args.action == "evencode":
        X = even_code(S)
        _emit(args, {"even_code": X.formatted(), "size": len(X)})
        return 0
    X = _code(args, S)
    if args.action == "degree":
        _emit(args, {"code": X.formatted(), "degree": degree(X, S), "horizon": S.max_len})
    elif args.action == "kernel":
        _emit(args, {"code": X.formatted(), "kernel": sorted(A.format(x) for x in kernel(X))})
    elif args.action == "maximal":
        m = maximality(X, S)
        payload = {"code": X.formatted(), "maximal": m.maximal, "degree": m.degree,
                   "degree_stable": m.degree_stable, "horizon": S.max_len}
        if m.witness is not None:
            payload["adjoinable"] = A.format(m.witness)
        _emit(args, payload)
    elif args.action == "complete":
        Z = symmetric_completion(X, S)
        _emit(args, {"code": X.formatted(), "completion": Z.formatted(), "degree": degree(Z, S)})
    elif args.action == "decode":
        f = CodingMorphism.default(X)
        halves = decode(S, f)
        payload = {
            "coding": {b: A.format(x) for b, x in zip(f.source, f.images)},
            "halves": [T.to_json() for T in halves],
        }
        print(_dump(payload))
    elif args.action == "coset":
        C = coset_automaton(X)
        if args.dot:
            print(dot.coset_automaton_dot(C), end="")
            return 0
        if args.incidence:
            print(dot.incidence_graph_dot(incidence_graph(X), A), end="")
            return 0
        _emit(args, {
            "states": [[A.format(p) or "ε" for p in C.members(s)] for s in C.states],
            "edges": [[s, A.names[a], t] for s, a, t in sorted(C.transitions)],
            "reversible": C.is_reversible(),
        })
    return 0


def cmd_returns(args) -> int:
    S = load_factor_set(args)
    A = S.alphabet
    targets = [A.parse(t) for t in _split_words(args.target)]
    if not targets:
        raise UsageError("give at least one --target")
    if args.action == "mixed":
        if len(targets) != 1:
            raise UsageError("mixed returns take a single target")
        words = mixed_returns(S, targets[0])
    else:
        if args.pair:
            targets = targets + [invert(t, A) for t in targets]
        res = complete_return_set(S, targets)
        if not res.sufficient:
            raise HorizonError("insufficient horizon: some occurrence of a target does not close")
        words = res.words
        if args.action in ("right", "left"):
            if len(targets) != 1:
                raise UsageError("right and left returns take a single target")
            k = len(targets[0])
            words = {u[k:] for u in words} if args.action == "right" else {u[:-k] for u in words}
    out = sorted(A.format(w) for w in words)
    if args.json:
        print(_dump({"targets": [A.format(t) for t in targets], "returns": out}))
    else:
        print(" ".join(out))
    return 0


def cmd_group(args) -> int:
    if args.action in ("verify-frt", "verify-fibt"):
        suite = args.action.split("-", 1)[1]
        return _verify(args, suite)
    fx = _fixture(args.fixture) if args.fixture else None
    if fx is not None and fx.kind == "group" and not args.generators:
        A = fx.alphabet()
        gens = fx.generators()
    elif fx is not None or args.set or args.spec:
        A = fx.alphabet() if fx is not None and fx.kind == "group" else load_factor_set(args).alphabet
        gens = [A.parse(g) for g in _split_words(args.generators)]
    else:
        raise UsageError("give a group fixture, or a factor set plus --generators")
    if args.even:
        g = even_subgroup_graph(A, parity(load_factor_set(args)))
    else:
        g = build_subgroup(A, gens)
    if args.action == "fold":
        if args.dot:
            print(dot.subgroup_graph_dot(g), end="")
            return 0
        _emit(args, g.to_json())
    elif args.action == "index":
        n = index(g)
        _emit(args, {"index": n if n is not None else "infinite"})
    elif args.action == "type":
        t = kurosh_type(g)
        _emit(args, {"i": t.i, "j": t.j, "symmetric_rank": t.symmetric_rank})
    elif args.action == "schreier":
        _emit(args, {"basis": sorted(A.format(w) for w in schreier_basis(g))})
    elif args.action == "prime":
        S = load_factor_set(args)
        _emit(args, {"prime": sorted(A.format(w) for w in prime_words(g, S))})
    return 0


def cmd_palindrome(args) -> int:
    S = load_factor_set(args)
    A = S.alphabet
    if args.action == "full":
        rep = fullness(S, args.max_word)
    else:
        if args.transducer:
            t = fixtures.load_transducer(_read_json(args.transducer))
        elif args.fixture:
            t = _fixture(args.fixture).transducer()
        else:
            raise UsageError("gfull needs --transducer or a transducer fixture")
        rep = g_fullness(S, transducer_group(t), args.max_word)
    payload = {"ok": rep.ok, "sufficient": rep.sufficient, "checked": rep.checked}
    if rep.witness:
        payload["witness"] = [A.format(w) for w in rep.witness]
    _emit(args, payload)
    if not rep.ok:
        return 1
    return 0 if rep.sufficient else 2


def _verify(args, suite: str) -> int:
    if not args.fixture:
        raise UsageError("verify needs --fixture (or use 'all')")
    options = {"max_word": args.max_word} if args.max_word is not None else {}
    rep = run_suite(suite, args.fixture, args.horizon, grow=args.grow, **options)
    print(_dump(rep.to_json()) if args.json else rep.line())
    return {FAIL: 1, INSUFFICIENT: 2}.get(rep.status, 0)


def cmd_verify(args) -> int:
    if args.action != "all":
        return _verify(args, args.action)
    names = [args.fixture] if args.fixture else list(fixtures.names())
    reports = [run_suite(s, n) for n in names for s in fixtures.load(n).suites]
    if args.json:
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.line())
    codes = {r.status for r in reports}
    return 1 if FAIL in codes else 2 if INSUFFICIENT in codes else 0


# parser


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-L", "--horizon", type=int, default=None, help="maximal word length")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT where a graph is produced")
    p.add_argument("--fixture", help=f"built-in example ({', '.join(fixtures.names())})")
    p.add_argument("--set", help="factor set JSON file")
    p.add_argument("--spec", help="morphism or involution JSON file")
    p.add_argument("--transducer", help="doubling transducer JSON file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="specular", description="Specular sets toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a factor set")
    p.add_argument("action", choices=["morphism", "transducer", "fixture", "json"])

    p = sub.add_parser("involution", parents=[common], help="linear involutions")
    p.add_argument("action", choices=["code", "connection"])
    p.add_argument("-N", "--steps", type=int, default=200, help="orbit length for connection search")

    p = sub.add_parser("analyze", parents=[common], help="extension graphs and classification")
    p.add_argument("action", choices=["graph", "complexity", "parity", "classify"])
    p.add_argument("--word", help="word whose extension graph is shown")

    p = sub.add_parser("bifix", parents=[common], help="bifix codes")
    p.add_argument("action", choices=["degree", "kernel", "maximal", "evencode", "decode", "coset", "complete"])
    p.add_argument("--code", action="append", help="code words, comma or space separated")
    p.add_argument("--layer", type=int, help="use S ∩ A^n as the code")
    p.add_argument("--symmetric", action="store_true", help="close the code under inverses")
    p.add_argument("--incidence", action="store_true", help="with coset --dot: draw the incidence graph")

    p = sub.add_parser("returns", parents=[common], help="return words")
    p.add_argument("action", choices=["complete", "right", "left", "mixed"])
    p.add_argument("--target", action="append", help="target word(s)")
    p.add_argument("--pair", action="store_true", help="add the inverses of the targets")

    p = sub.add_parser("group", parents=[common], help="subgroups of the specular group")
    p.add_argument("action", choices=["fold", "index", "type", "schreier", "prime", "verify-frt", "verify-fibt"])
    p.add_argument("--generators", action="append", help="generators, comma or space separated")
    p.add_argument("--even", action="store_true", help="use the even subgroup of the factor set")
    p.add_argument("--grow", action="store_true")
    p.add_argument("--max-word", type=int, default=None)

    p = sub.add_parser("palindrome", parents=[common], help="fullness checks")
    p.add_argument("action", choices=["full", "gfull"])
    p.add_argument("--max-word", type=int, default=None, help="longest target word")

    p = sub.add_parser("verify", parents=[common], help="theorem checks on fixtures")
    p.add_argument("action", choices=sorted(SUITES) + ["all"])
    p.add_argument("--grow", action="store_true", help="double the horizon until the verdict is conclusive")
    p.add_argument("--max-word", type=int, default=None, help="longest target word")
    return parser


COMMANDS = {
    "gen": cmd_gen,
    "involution": cmd_involution,
    "analyze": cmd_analyze,
    "bifix": cmd_bifix,
    "returns": cmd_returns,
    "group": cmd_group,
    "palindrome": cmd_palindrome,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HorizonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SpecularError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
