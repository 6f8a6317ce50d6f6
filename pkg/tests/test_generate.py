import pytest

from specular import fixtures
from specular.core import SymmetricAlphabet
from specular.generate import (
    DoublingTransducer,
    Morphism,
    derived_involution,
    doubling_image,
    fixed_point_factors,
    reversal_closed,
    state_swap,
)

from oracles import naive_fixed_point_factors

AB = SymmetricAlphabet.identity("ab")
FIB = Morphism.from_strings(AB, {"a": "ab", "b": "a"})


def test_morphism_apply_and_power():
    assert AB.format(FIB.apply(AB.parse("a"))) == "ab"
    assert AB.format(FIB.power(4).apply(AB.parse("a"))) == "abaababa"


@pytest.mark.parametrize("name,L", [("fibonacci", 12), ("cassaigne", 10), ("doubled-fibonacci", 10)])
def test_fixed_point_factors_match_long_prefix(name, L):
    fx = fixtures.load(name)
    m, seed = fx.morphism()
    got = fixed_point_factors(m, seed, L)
    images = {a: m.images[a] for a in range(m.alphabet.size)}
    assert got.words == frozenset(naive_fixed_point_factors(images, seed, L))


def test_fibonacci_complexity_is_sturmian():
    S = fixed_point_factors(FIB, 0, 12)
    assert [len(S.of_length(n)) for n in range(1, 13)] == [n + 1 for n in range(1, 13)]


def test_transducer_derived_involution_and_swap():
    t = fixtures.load("doubled-fibonacci").transducer()
    A = derived_involution(t)
    assert A.names == ("a", "b", "c", "d")
    assert A.inv == (0, 3, 2, 1)
    # the state swap exchanges a with c and b with d
    assert state_swap(t) == (2, 3, 0, 1)


def test_transducer_rejects_non_injective_output():
    with pytest.raises(ValueError):
        DoublingTransducer.from_edges(AB, [[0, "a", "a", 1], [1, "a", "a", 0], [0, "b", "b", 0], [1, "b", "c", 1]])


def test_doubling_image_equals_morphic_description():
    fx = fixtures.load("doubled-fibonacci")
    T = fixtures.load("fibonacci").factor_set(14)
    D = doubling_image(fx.transducer(), T)
    m, seed = fx.morphism()
    assert D.words == fixed_point_factors(m, seed, 14).words


def test_reversal_closed():
    assert reversal_closed(fixtures.load("fibonacci").factor_set(10))
    assert not reversal_closed(fixtures.load("cassaigne").factor_set(6))
