"""End-to-end acceptance checks, one test and one PASS/FAIL line per criterion."""

import random
from contextlib import contextmanager

import pytest

import conftest
from specular import fixtures
from specular.bifix import (
    BifixCode,
    CodingMorphism,
    coset_automaton,
    decode,
    degree,
    even_code,
    is_bifix,
    kernel,
    layer_code,
    maximality,
)
from specular.core import FactorSet, SymmetricAlphabet, invert
from specular.generate import doubling_image
from specular.group import (
    bounded_freeness,
    build_subgroup,
    even_subgroup_graph,
    full_group_graph,
    index,
    is_monoidal_basis,
    kurosh_type,
    saturation,
    saturation_check,
    schreier_basis,
)
from specular.involution import find_connection, natural_coding
from specular.palindrome import is_g_full, orbit, transducer_group
from specular.returns import (
    complete_return_set,
    complete_returns,
    is_valid_mixed_target,
    mixed_returns,
    right_returns,
)
from specular.structure import classify, complexity, parity

from oracles import words

FLAGSHIP = ["doubled-fibonacci", "cassaigne"]
SPECULAR_FIXTURES = ["cassaigne", "doubled-fibonacci", "golden-involution", "doubled-involution"]


@contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException:
        line = f"criterion {n:>2} FAIL  {title}"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"criterion {n:>2} PASS  {title}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def fset(name, L):
    return fixtures.load(name).factor_set(L)


def test_01_complexity():
    with criterion(1, "factor complexity n(|A|-2)+2"):
        for name in FLAGSHIP:
            p = complexity(fset(name, 14)).p
            assert [p[n] for n in range(1, 13)] == [2 * n + 2 for n in range(1, 13)]
        p = complexity(fset("golden-involution", 9)).p
        assert [p[n] for n in range(1, 9)] == [4 * n + 2 for n in range(1, 9)]


def test_02_classification():
    with criterion(2, "specular classification of flagship sets; Fibonacci is a tree set of characteristic 1"):
        for name in FLAGSHIP + ["golden-involution"]:
            c = classify(fixtures.load(name).factor_set())
            assert c.specular, (name, c.witness)
            assert c.characteristic == 2 and c.components == 2
        c = classify(fset("fibonacci", 12))
        assert c.tree and c.characteristic == 1 and not c.specular


def test_03_even_code():
    with criterion(3, "even code of the Cassaigne set and size 2|A|-2"):
        S = fset("cassaigne", 14)
        assert sorted(even_code(S).formatted()) == ["abc", "ac", "b", "ca", "cda", "d"]
        for name in SPECULAR_FIXTURES:
            S = fixtures.load(name).factor_set()
            assert len(even_code(S)) == 2 * S.alphabet.size - 2, name


def test_04_decoding():
    with criterion(4, "decoding by the even code gives two tree sets of characteristic 1"):
        S = fset("cassaigne", 18)
        T0, T1 = decode(S, CodingMorphism.default(even_code(S)))
        for T in (T0, T1):
            assert T.max_len >= 5
            c = classify(T)
            assert c.tree and c.characteristic == 1


RIGHT = {
    "a": "bca bcda cda",
    "b": "cab cdacdab cdacdacdab",
    "c": "abc dabc dac",
    "d": "abcabcd abcabcabcd acd",
}
COMPLETE = {
    "a": "abca abcda acda",
    "b": "bcab bcdacdab bcdacdacdab",
    "c": "cabc cdabc cdac",
    "d": "dabcabcabcd dabcabcd dacd",
}
GOLDEN_COMPLETE = {
    "a": "ab'cba' ab'cbc'a a'cb'c'a ab'c'ba' a'cbc'a a'cb'c'ba'",
    "b": "ba'cb ba'cb' bc'ab' b'cb b'c'ab' b'c'b",
    "c": "cba'c cbc' cb'c' c'ab'c c'ab'c' c'ba'c",
}
GOLDEN_MIXED = {
    "a": "b'cb b'cbc'a a'cb'c'a b'c'b a'cbc'a a'cb'c'b",
    "b": "a'cb a'c c'a b'cb b'c'a b'c'b",
    "c": "ba'c b b' c'ab'c c'ab' c'ba'c",
}


def test_05_golden_return_sets(doubled_deep, cassaigne_deep, golden_deep):
    with criterion(5, "return-word tables reproduced exactly"):
        S = doubled_deep
        A = S.alphabet
        for x in "abcd":
            assert right_returns(S, A.parse(x)) == words(S, RIGHT[x]), x
            assert complete_returns(S, [A.parse(x)]) == words(S, COMPLETE[x]), x
        assert complete_returns(S, words(S, "b d")) == words(S, "bcab bcd dab dacd")
        assert mixed_returns(S, A.parse("b")) == words(S, "c cab dab dac")
        C = cassaigne_deep
        assert complete_returns(C, words(C, "a b")) == words(C, "ab acda bca bcda")
        G = golden_deep
        for x in "abc":
            pair = words(G, f"{x} {x}'")
            assert complete_returns(G, pair) == words(G, GOLDEN_COMPLETE[x]), x
            assert mixed_returns(G, G.alphabet.parse(x)) == words(G, GOLDEN_MIXED[x]), x


def sample_codes(S, count, seed=7):
    """Bifix codes with empty kernel built from random stored words of lengths 1 to 4."""
    rnd = random.Random(seed)
    pool = [w for w in S.nonempty() if len(w) <= 4]
    out = []
    seen = set()
    while len(out) < count:
        X = frozenset(rnd.sample(pool, rnd.randint(1, 5)))
        if X in seen or not is_bifix(X):
            continue
        code = BifixCode(S.alphabet, X)
        if kernel(code):
            continue
        seen.add(X)
        out.append(code)
    return out


def test_06_cardinality(doubled_deep, cassaigne_deep):
    with criterion(6, "cardinality of right, mixed and complete return sets"):
        for S in (doubled_deep, cassaigne_deep):
            k = S.alphabet.size
            for w in S.nonempty():
                if len(w) > 5:
                    break
                res = complete_return_set(S, [w])
                assert res.sufficient
                assert len(res) == k - 1
                if is_valid_mixed_target(S, w):
                    res = complete_return_set(S, [w, invert(w, S.alphabet)])
                    assert res.sufficient
                    assert len(res) == k
            for X in sample_codes(S, 20):
                res = complete_return_set(S, X.words)
                assert res.sufficient
                assert len(res) == len(X) + k - 2, X.formatted()


def test_07_right_returns_are_even_subgroup_bases(doubled_deep, cassaigne_deep):
    with criterion(7, "right return words are bases of the even subgroup"):
        for S in (doubled_deep, cassaigne_deep):
            even = even_subgroup_graph(S.alphabet, parity(S))
            for w in S.nonempty():
                if len(w) > 5:
                    break
                R = right_returns(S, w)
                assert len(R) == 3
                assert build_subgroup(S.alphabet, R) == even


def test_08_mixed_return_bases(doubled_deep, cassaigne_deep, golden_deep):
    with criterion(8, "mixed return words are monoidal bases of the whole group"):
        for S in (doubled_deep, cassaigne_deep, golden_deep):
            full = full_group_graph(S.alphabet)
            for w in S.nonempty():
                if len(w) > 4:
                    break
                if not is_valid_mixed_target(S, w):
                    continue
                M = mixed_returns(S, w)
                assert len(M) == S.alphabet.size
                assert build_subgroup(S.alphabet, M) == full
                assert is_monoidal_basis(M, full)


def test_09_finite_index_basis():
    with criterion(9, "S∩A^n is a basis of an index-n subgroup; even code has index 2"):
        for name in FLAGSHIP:
            S = fset(name, 14)
            A = S.alphabet
            for n in range(1, 5):
                X = layer_code(S, n)
                rep = maximality(X, S)
                assert X.is_symmetric() and rep.maximal and rep.degree == n
                g = build_subgroup(A, X.words)
                assert g.is_complete() and g.size == n
                assert len(X) == n * (A.size - 2) + 2
            assert index(build_subgroup(A, even_code(S).words)) == 2


GOLDEN_L3 = (
    "a b c a' b' c' "
    "ab' ba' bc' b'c b'c' a'c cb cb' c'a c'b "
    "ab'c ab'c' ba'c bc'a b'cb b'c'a b'c'b a'cb a'cb' cba' cbc' cb'c' c'ab' c'ba'"
)


def test_10_linear_involution(golden_deep):
    with criterion(10, "connection-free involution: coding, mixed returns and coset automaton"):
        T = fixtures.load("golden-involution").involution()
        assert find_connection(T, 200) is None
        S = natural_coding(T, 3, connection_horizon=None)
        assert set(S.nonempty()) == words(S, GOLDEN_L3)
        assert mixed_returns(golden_deep, golden_deep.alphabet.parse("c")) == words(golden_deep, GOLDEN_MIXED["c"])
        C = coset_automaton(layer_code(natural_coding(T, 6, connection_horizon=None), 3))
        assert len(C.states) == 3 and C.is_reversible()


def test_11_cross_validation():
    with criterion(11, "involution coding equals the doubling of the Fibonacci set"):
        T = fixtures.load("doubled-involution").involution()
        coded = natural_coding(T, 10)
        doubled = doubling_image(fixtures.load("doubled-fibonacci").transducer(), fset("fibonacci", 10))
        assert coded.alphabet.names == doubled.alphabet.names
        assert coded.words == doubled.words


def test_12_group_fixtures():
    with criterion(12, "Schreier bases, types and the symmetric rank formula"):
        expected = {
            "even-length-subgroup": (["ab", "ac", "ad", "ba", "ca", "da"], (3, 0)),
            "stabilizer-subgroup": (["a", "bad", "bb", "bcd", "c", "dd"], (1, 4)),
        }
        for name, (basis, kind) in expected.items():
            fx = fixtures.load(name)
            A = fx.alphabet()
            g = build_subgroup(A, fx.generators())
            assert sorted(A.format(w) for w in schreier_basis(g)) == basis
            t = kurosh_type(g)
            assert tuple(t) == kind
            assert t.symmetric_rank == index(g) * (A.size - 2) + 2


def test_13_saturation_and_freeness(golden):
    with criterion(13, "saturation for symmetric codes, failure without symmetry, bounded freeness"):
        for n in (2, 3):
            assert saturation_check(layer_code(golden, n).words, golden)
        A = SymmetricAlphabet.free("ab")
        S = FactorSet.from_words(A, [A.parse("ab'" * 6), A.parse("a'b" * 6)], 8)
        rep = saturation(words(A, "a ba'"), S)
        assert not rep.ok and rep.witness == A.parse("b")
        tested = 0
        for name in SPECULAR_FIXTURES:
            S = fixtures.load(name).factor_set()
            codes = [layer_code(S, n) for n in (1, 2, 3)] + [even_code(S)]
            for X in codes:
                assert X.is_symmetric()
                assert bounded_freeness(X.words, S.alphabet, 6), (name, X.formatted())
                tested += 1
        assert tested == 16


def test_14_g_fullness(doubled_deep):
    with criterion(14, "G-fullness of the doubled Fibonacci set and its orbit tables"):
        S = doubled_deep
        G = transducer_group(fixtures.load("doubled-fibonacci").transducer())
        assert is_g_full(S, G, 3)
        X = orbit(S.alphabet.parse("a"), G)
        assert X == frozenset(words(S, "a c"))
        returns = complete_returns(S, X)
        assert returns == words(S, "abc ac ca cda")
        # the antimorphism other than inversion
        sigma_tau = next(g for g in G.elements if g.anti and g.perm != S.alphabet.inv)
        assert all(sigma_tau(u) == u for u in returns)
        fx = fixtures.load("fibonacci-split")
        T = fx.factor_set(40)
        H = transducer_group(fx.transducer())
        Y = orbit(T.alphabet.parse("ab"), H)
        assert Y == frozenset(words(T, "ab ba cd dc"))
        returns = complete_returns(T, Y)
        assert returns == words(T, "aba baab bab cdc dccd dcd")
        assert all(u == u[::-1] for u in returns)


def test_15_converse_property(doubled_deep, cassaigne_deep):
    with criterion(15, "layers are monoidal bases of the subgroups they generate"):
        for name in FLAGSHIP:
            S = fset(name, 14)
            A = S.alphabet
            for n in range(1, 5):
                X = layer_code(S, n)
                g = build_subgroup(A, X.words)
                assert is_monoidal_basis(X.words, g)
            p = complexity(S).p
            assert all(p[n] == n * (A.size - 2) + 2 for n in range(1, S.max_len))
