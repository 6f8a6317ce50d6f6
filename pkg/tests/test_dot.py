from specular import fixtures
from specular.bifix import coset_automaton, incidence_graph, layer_code
from specular.dot import (
    coset_automaton_dot,
    extension_graph_dot,
    incidence_graph_dot,
    parity_graph_dot,
    subgroup_graph_dot,
)
from specular.group import build_subgroup
from specular.structure import extension_graph, parity


def balanced(text):
    return text.count("{") == text.count("}") == 1


def test_extension_graph_dot(cassaigne):
    text = extension_graph_dot(extension_graph(cassaigne, ()), cassaigne.alphabet)
    assert text.startswith("graph") and balanced(text)
    assert text.count(" -- ") == len(extension_graph(cassaigne, ()).edges)


def test_parity_and_subgroup_dot(cassaigne):
    P = parity(cassaigne)
    assert parity_graph_dot(P, cassaigne.alphabet).count("->") == cassaigne.alphabet.size
    fx = fixtures.load("even-length-subgroup")
    g = build_subgroup(fx.alphabet(), fx.generators())
    text = subgroup_graph_dot(g)
    assert text.startswith("digraph") and balanced(text)


def test_coset_and_incidence_dot(golden):
    X = layer_code(golden, 3)
    assert balanced(coset_automaton_dot(coset_automaton(X)))
    text = incidence_graph_dot(incidence_graph(X), golden.alphabet)
    assert text.count(" -- ") == len(incidence_graph(X).edges)
