import pytest

from specular import fixtures
from specular.generate import fixed_point_factors


def test_names_are_ordered_and_loadable():
    names = fixtures.names()
    assert names[0] == "fibonacci"
    for n in names:
        fx = fixtures.load(n)
        assert fx.name == n
        assert fx.description


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixtures.load("nope")


@pytest.mark.parametrize("name", ["fibonacci", "cassaigne", "doubled-fibonacci", "fibonacci-split", "golden-involution", "doubled-involution"])
def test_factor_set_defaults_to_declared_horizon(name):
    fx = fixtures.load(name)
    S = fx.factor_set()
    assert S.max_len == fx.horizon
    assert fx.suites


def test_cassaigne_uses_declared_involution():
    A = fixtures.load("cassaigne").alphabet()
    assert A.format((A.inv[A.index("b")],)) == "d"


def test_morphism_loader_matches_generation():
    fx = fixtures.load("cassaigne")
    m, seed = fx.morphism()
    assert fx.factor_set(10).words == fixed_point_factors(m, seed, 10).words


def test_group_fixture_generators():
    fx = fixtures.load("stabilizer-subgroup")
    assert len(fx.generators()) == 6
