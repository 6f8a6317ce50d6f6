"""Data-driven theorem checks over the built-in fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import fixtures
from .bifix import CodingMorphism, decode, even_code, layer_code, maximality
from .core import FactorSet, HorizonError, invert
from .generate import doubling_image
from .group import (
    build_subgroup,
    bounded_freeness,
    full_group_graph,
    index,
    is_basis_of_even_subgroup,
    is_monoidal_basis,
    kurosh_type,
    saturation,
    schreier_basis,
)
from .palindrome import fullness, g_fullness, transducer_group
from .returns import complete_return_set, is_valid_mixed_target
from .structure import classify, complexity, parity

PASS, FAIL, INSUFFICIENT = "pass", "fail", "insufficient-horizon"


@dataclass
class VerificationReport:
    theorem: str
    fixture: str
    horizon: int | None
    status: str = PASS
    details: dict = field(default_factory=dict)

    def fail(self, reason: str, witness) -> "VerificationReport":
        if self.status != FAIL:
            self.status = FAIL
            self.details["reason"] = reason
            self.details["witness"] = witness
        return self

    def insufficient(self, reason: str) -> "VerificationReport":
        if self.status == PASS:
            self.status = INSUFFICIENT
            self.details["reason"] = reason
        return self

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "fixture": self.fixture,
            "horizon": self.horizon,
            "status": self.status,
            "details": self.details,
        }

    def line(self) -> str:
        extra = ""
        if "reason" in self.details:
            extra = f" ({self.details['reason']})"
        return f"{self.theorem:<12} {self.fixture:<22} L={self.horizon} {self.status}{extra}"


def _returns(S: FactorSet, targets) -> tuple[frozenset, bool]:
    res = complete_return_set(S, targets)
    return res.words, res.sufficient


def check_classify(S: FactorSet, fx, rep: VerificationReport, **_) -> VerificationReport:
    c = classify(S)
    expected = fx.data.get("expected", {})
    want_specular = expected.get("specular", True)
    rep.details["classification"] = c.to_json()
    if c.specular != want_specular:
        return rep.fail("specularity verdict differs from the fixture", c.witness or S.alphabet.format(()))
    cx = complexity(S)
    k = S.alphabet.size
    if c.specular:
        formula = [n * (k - 2) + 2 for n in range(1, S.max_len + 1)]
    else:
        formula = [n * (k - 1) + 1 for n in range(1, S.max_len + 1)]
    rep.details["p"] = list(cx.p)
    if c.tree and list(cx.p[1:]) != formula:
        n = next(i for i, (a, b) in enumerate(zip(cx.p[1:], formula), 1) if a != b)
        return rep.fail("complexity formula broken", {"n": n, "p_n": cx.p[n], "expected": formula[n - 1]})
    if not cx.consistent:
        return rep.fail("complexity differences disagree with extension counts", list(cx.p))
    return rep


def check_cardinality(S: FactorSet, fx, rep: VerificationReport, max_word: int = 5, **_) -> VerificationReport:
    A = S.alphabet
    k = A.size
    fmt = A.format
    for n in range(1, 5):
        X = layer_code(S, n)
        if len(X) != n * (k - 2) + 2:
            return rep.fail(f"|S∩A^{n}| differs from n(|A|-2)+2", sorted(map(fmt, X.words)))
    E = even_code(S)
    rep.details["even_code"] = E.formatted()
    if len(E) != 2 * k - 2:
        return rep.fail("even code size differs from 2|A|-2", E.formatted())
    counted = {"right": 0, "mixed": 0, "codes": 0}
    for w in S.nonempty():
        if len(w) > max_word:
            break
        words, ok = _returns(S, [w])
        if not ok:
            return rep.insufficient(f"returns to {fmt(w)} do not close")
        if len(words) != k - 1:
            return rep.fail("number of right return words differs from |A|-1", fmt(w))
        counted["right"] += 1
        if is_valid_mixed_target(S, w):
            words, ok = _returns(S, [w, invert(w, A)])
            if not ok:
                return rep.insufficient(f"mixed returns to {fmt(w)} do not close")
            if len(words) != k:
                return rep.fail("number of mixed return words differs from |A|", fmt(w))
            counted["mixed"] += 1
    # equal-length sets are bifix codes with empty kernel
    for n in range(1, 4):
        layer = S.of_length(n)
        for size in range(1, len(layer) + 1):
            X = layer[:size]
            words, ok = _returns(S, X)
            if not ok:
                return rep.insufficient("complete returns to a sampled code do not close")
            if len(words) != len(X) + k - 2:
                return rep.fail("|CR(X)| differs from |X|+|A|-2", sorted(map(fmt, X)))
            counted["codes"] += 1
    rep.details["checked"] = counted
    return rep


def check_frt(S: FactorSet, fx, rep: VerificationReport, max_word: int = 5, **_) -> VerificationReport:
    A = S.alphabet
    P = parity(S)
    count = 0
    for w in S.nonempty():
        if len(w) > max_word:
            break
        words, ok = _returns(S, [w])
        if not ok:
            return rep.insufficient(f"returns to {A.format(w)} do not close")
        R = {u[len(w):] for u in words}
        if not is_basis_of_even_subgroup(R, A, P):
            return rep.fail("right return words are not a basis of the even subgroup", A.format(w))
        count += 1
    rep.details["targets"] = count
    return rep


def check_mixed(S: FactorSet, fx, rep: VerificationReport, max_word: int = 4, **_) -> VerificationReport:
    from .returns import mixed_returns

    A = S.alphabet
    full = full_group_graph(A)
    count = 0
    for w in S.nonempty():
        if len(w) > max_word:
            break
        if not is_valid_mixed_target(S, w):
            continue
        try:
            M = mixed_returns(S, w)
        except HorizonError:
            return rep.insufficient(f"mixed returns to {A.format(w)} do not close")
        if len(M) != A.size or not is_monoidal_basis(M, full):
            return rep.fail("mixed return words are not a monoidal basis of the group", A.format(w))
        count += 1
    rep.details["targets"] = count
    return rep


def check_fibt(S: FactorSet, fx, rep: VerificationReport, **_) -> VerificationReport:
    A = S.alphabet
    k = A.size
    rows = []
    for n in range(1, 5):
        X = layer_code(S, n)
        m = maximality(X, S)
        g = build_subgroup(A, X.words)
        rows.append({"n": n, "size": len(X), "degree": m.degree, "index": index(g)})
        if not (X.is_symmetric() and m.maximal and m.degree == n):
            return rep.fail(f"S∩A^{n} is not a symmetric S-maximal code of degree {n}", X.formatted())
        if index(g) != n or len(X) != n * (k - 2) + 2 or not is_monoidal_basis(X.words, g):
            return rep.fail(f"S∩A^{n} is not a monoidal basis of an index-{n} subgroup", X.formatted())
    E = even_code(S)
    if index(build_subgroup(A, E.words)) != 2:
        return rep.fail("even code does not generate an index-2 subgroup", E.formatted())
    rep.details["layers"] = rows
    return rep


def check_decode(S: FactorSet, fx, rep: VerificationReport, **_) -> VerificationReport:
    E = even_code(S)
    f = CodingMorphism.default(E)
    halves = decode(S, f)
    out = []
    for T in halves:
        if T.max_len < 5:
            return rep.insufficient("decoded horizon below 5")
        c = classify(T)
        out.append({"letters": list(T.alphabet.names), "horizon": T.max_len, "tree": c.tree,
                    "characteristic": c.characteristic})
        if not (c.tree and c.characteristic == 1):
            return rep.fail("decoded half is not a tree set of characteristic 1", list(T.alphabet.names))
    rep.details["halves"] = out
    return rep


def check_gfull(S: FactorSet, fx, rep: VerificationReport, max_word: int = 3, **_) -> VerificationReport:
    G = transducer_group(fx.transducer())
    r = g_fullness(S, G, max_word)
    rep.details["orbits"] = r.checked
    if not r.ok:
        w, u = r.witness
        return rep.fail("complete return word fixed by no nontrivial element", [S.alphabet.format(w), S.alphabet.format(u)])
    if not r.sufficient:
        return rep.insufficient("some complete return words did not close")
    return rep


def check_full(S: FactorSet, fx, rep: VerificationReport, max_word: int | None = None, **_) -> VerificationReport:
    # returns to palindromes of length L/3 rarely close within L; L/4 does on the fixtures
    r = fullness(S, S.max_len // 4 if max_word is None else max_word)
    rep.details["palindromes"] = r.checked
    if not r.ok:
        p, u = r.witness
        return rep.fail("non-palindromic complete return word", [S.alphabet.format(p), S.alphabet.format(u)])
    if not r.sufficient:
        return rep.insufficient("some complete return words did not close")
    return rep


def check_saturation(S: FactorSet, fx, rep: VerificationReport, **_) -> VerificationReport:
    A = S.alphabet
    for n in (2, 3):
        X = layer_code(S, n)
        r = saturation(X.words, S)
        if not r.ok:
            return rep.fail(f"S∩A^{n} is not saturated", A.format(r.witness) if r.witness else X.formatted())
        if not bounded_freeness(X.words, A, 6):
            return rep.fail(f"S∩A^{n} is not free up to 6 factors", X.formatted())
    return rep


def check_group(S, fx, rep: VerificationReport, **_) -> VerificationReport:
    A = fx.alphabet()
    g = build_subgroup(A, fx.generators())
    expected = fx.data.get("expected", {})
    t = kurosh_type(g)
    n = index(g)
    rep.details.update({"index": n, "type": [t.i, t.j]})
    if n is None:
        return rep.fail("subgroup has infinite index", [])
    X = sorted(A.format(w) for w in schreier_basis(g))
    rep.details["schreier"] = X
    if t.symmetric_rank != n * (A.size - 2) + 2:
        return rep.fail("symmetric rank differs from n(r-2)+2", [t.i, t.j])
    if len(X) != n * A.size - 2 * (n - 1):
        return rep.fail("Schreier basis size differs from nr-2(n-1)", X)
    if "index" in expected and expected["index"] != n:
        return rep.fail("index differs from the fixture", n)
    if "type" in expected and list(expected["type"]) != [t.i, t.j]:
        return rep.fail("type differs from the fixture", [t.i, t.j])
    if "schreier" in expected and sorted(expected["schreier"]) != X:
        return rep.fail("Schreier basis differs from the fixture", X)
    return rep


def check_coding(S: FactorSet, fx, rep: VerificationReport, **_) -> VerificationReport:
    ref = fixtures.load(fx.data.get("compare", "doubled-fibonacci"))
    base = fixtures.load(ref.data["base"]).factor_set(S.max_len)
    D = doubling_image(ref.transducer(), base)
    if D.alphabet != S.alphabet or D.words != S.words:
        diff = sorted(S.alphabet.format(w) for w in D.words ^ S.words)
        return rep.fail("natural coding differs from the doubling image", diff[:10])
    rep.details["words"] = len(S)
    return rep


SUITES: dict[str, Callable] = {
    "classify": check_classify,
    "cardinality": check_cardinality,
    "frt": check_frt,
    "mixed": check_mixed,
    "fibt": check_fibt,
    "decode": check_decode,
    "gfull": check_gfull,
    "full": check_full,
    "saturation": check_saturation,
    "group": check_group,
    "coding": check_coding,
}

# horizons at which the return-word searches of each fixture close
VERIFY_HORIZON = {
    "fibonacci": 40,
    "cassaigne": 50,
    "doubled-fibonacci": 50,
    "fibonacci-split": 30,
    "golden-involution": 60,
    "doubled-involution": 10,
}

NEEDS_RETURNS = {"cardinality", "frt", "mixed", "gfull", "full"}

# decoding divides the horizon by the longest even-code word
DECODE_HORIZON = 18


def run_suite(suite: str, fixture: str, horizon: int | None = None, grow: bool = False, **options) -> VerificationReport:
    """Run one check; with ``grow`` the horizon doubles until the result is conclusive (up to 128)."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    fx = fixtures.load(fixture)
    if fx.kind == "group":
        rep = VerificationReport(suite, fixture, None)
        return SUITES[suite](None, fx, rep, **options)
    if horizon is None:
        if suite in NEEDS_RETURNS:
            horizon = VERIFY_HORIZON.get(fixture, fx.horizon)
        elif suite == "decode":
            horizon = max(fx.horizon, DECODE_HORIZON)
        else:
            horizon = fx.horizon
    while True:
        rep = VerificationReport(suite, fixture, horizon)
        S = fx.factor_set(horizon)
        try:
            rep = SUITES[suite](S, fx, rep, **options)
        except HorizonError as exc:
            rep.insufficient(str(exc))
        if rep.status != INSUFFICIENT or not grow or horizon >= 128:
            return rep
        horizon = min(128, horizon * 2)


def declared(fixture: str) -> list[str]:
    return list(fixtures.load(fixture).suites)


def run_all(names=None) -> list[VerificationReport]:
    out = []
    for name in names or fixtures.names():
        for suite in declared(name):
            out.append(run_suite(suite, name))
    return out
