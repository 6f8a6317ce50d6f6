import pytest

from specular import fixtures
from specular.core import FactorSet, HorizonError, SymmetricAlphabet
from specular.structure import (
    characteristic,
    check_parity_symmetry,
    classify,
    complexity,
    extension_graph,
    generalized_extension_graph,
    in_part,
    is_uniformly_recurrent,
    multiplicity,
    parity,
)

from oracles import naive_extension_counts, words

SPECULAR = ["cassaigne", "doubled-fibonacci", "fibonacci-split", "golden-involution", "doubled-involution"]


def test_empty_word_graph_of_cassaigne(cassaigne):
    g = extension_graph(cassaigne, ())
    assert len(g.components()) == 2
    assert g.is_acyclic() and not g.is_tree()
    assert characteristic(cassaigne) == 2


@pytest.mark.parametrize("name", SPECULAR)
def test_specular_fixtures_classify(name):
    S = fixtures.load(name).factor_set()
    c = classify(S)
    assert c.specular, c.witness
    assert c.characteristic == 2


def test_fibonacci_is_a_tree_set_of_characteristic_one(fib):
    c = classify(fib)
    assert c.tree and not c.specular
    assert c.characteristic == 1


def test_classify_needs_horizon():
    S = fixtures.load("cassaigne").factor_set(2)
    with pytest.raises(HorizonError):
        classify(S)


def test_multiplicity_formula_against_naive(doubled):
    for w in doubled:
        if len(w) > doubled.max_len - 2:
            break
        l, r, b = naive_extension_counts(doubled, w)
        assert multiplicity(doubled, w) == b - l - r + 1


def test_non_tree_set_is_detected():
    A = SymmetricAlphabet.identity("ab")
    # two unrelated periodic words give a cycle in the graph of the empty word
    S = FactorSet.from_words(A, [A.parse("abababab"), A.parse("aabbaabb")], 4)
    assert not classify(S).tree


@pytest.mark.parametrize("name,slope", [("cassaigne", 2), ("doubled-fibonacci", 2), ("golden-involution", 4)])
def test_complexity_is_linear(name, slope):
    S = fixtures.load(name).factor_set()
    c = complexity(S)
    assert c.consistent
    assert all(c.p[n] == slope * n + 2 for n in range(1, S.max_len))


def test_uniform_recurrence_witnessed(cassaigne_deep):
    assert is_uniformly_recurrent(cassaigne_deep, k=4)


def test_uniform_recurrence_needs_horizon(cassaigne):
    with pytest.raises(HorizonError):
        is_uniformly_recurrent(cassaigne, k=2)


@pytest.mark.parametrize("name,even", [
    ("cassaigne", "b d"),
    ("doubled-fibonacci", "b d"),
    ("fibonacci-split", "a b c d"),
    ("golden-involution", "a a'"),
])
def test_even_letters(name, even):
    S = fixtures.load(name).factor_set()
    P = parity(S)
    assert set(P.even_letters()) == {w[0] for w in words(S, even)}


def test_parity_partition(cassaigne):
    P = parity(cassaigne)
    assert check_parity_symmetry(cassaigne, P)
    for w in cassaigne.nonempty():
        parts = [(i, j) for i in (0, 1) for j in (0, 1) if in_part(P, w, i, j)]
        assert len(parts) == 1
        i, j = parts[0]
        assert P.word_parity(w) == (i ^ j)


def test_generalized_graph_on_letters_matches_plain(cassaigne):
    A = cassaigne.alphabet
    letters = [(a,) for a in range(A.size)]
    g = generalized_extension_graph(cassaigne, A.parse("a"), letters, letters)
    h = extension_graph(cassaigne, A.parse("a"))
    assert len(g.edges) == len(h.edges)
    assert g.is_tree() == h.is_tree()
