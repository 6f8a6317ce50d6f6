"""Graphviz DOT text for the graphs built by the analysis modules."""

from __future__ import annotations

from .bifix import CosetAutomaton, IncidenceGraph
from .core import SymmetricAlphabet
from .group import SubgroupGraph
from .structure import ExtensionGraph, ParityGraph


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def extension_graph_dot(g: ExtensionGraph, alphabet: SymmetricAlphabet) -> str:
    fmt = alphabet.format
    title = fmt(g.w) or "ε"
    lines = [f"graph {_q('E(' + title + ')')} {{", "  rankdir=LR;"]
    for x in sorted(g.left):
        lines.append(f"  {_q('L:' + fmt(_w(x)))} [label={_q(fmt(_w(x)))}];")
    for y in sorted(g.right):
        lines.append(f"  {_q('R:' + fmt(_w(y)))} [label={_q(fmt(_w(y)))}];")
    for x, y in sorted(g.edges):
        lines.append(f"  {_q('L:' + fmt(_w(x)))} -- {_q('R:' + fmt(_w(y)))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _w(x) -> tuple:
    return x if isinstance(x, tuple) else (x,)


def parity_graph_dot(P: ParityGraph, alphabet: SymmetricAlphabet) -> str:
    lines = ["digraph parity {", "  0; 1;"]
    for i, a, j in P.edges:
        lines.append(f"  {i} -> {j} [label={_q(alphabet.names[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subgroup_graph_dot(g: SubgroupGraph) -> str:
    A = g.alphabet
    lines = ["digraph subgroup {", "  0 [shape=doublecircle];"]
    seen = set()
    for u, a, v in g.edges():
        # draw each geometric edge once
        if (v, A.inv[a], u) in seen:
            continue
        seen.add((u, a, v))
        lines.append(f"  {u} -> {v} [label={_q(A.names[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_graph_dot(G: IncidenceGraph, alphabet: SymmetricAlphabet) -> str:
    fmt = alphabet.format
    lines = ["graph incidence {"]
    for p in sorted(G.prefixes):
        lines.append(f"  {_q('P:' + fmt(p))} [label={_q(fmt(p))}];")
    for q in sorted(G.suffixes):
        lines.append(f"  {_q('Q:' + fmt(q))} [label={_q(fmt(q))}, shape=box];")
    for p, q in sorted(G.edges):
        lines.append(f"  {_q('P:' + fmt(p))} -- {_q('Q:' + fmt(q))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coset_automaton_dot(C: CosetAutomaton) -> str:
    A = C.alphabet
    lines = ["digraph coset {", "  0 [shape=doublecircle];"]
    for s in C.states:
        members = ", ".join(A.format(p) or "ε" for p in C.members(s))
        lines.append(f"  {s} [label={_q(members)}];")
    for s, a, t in sorted(C.transitions):
        lines.append(f"  {s} -> {t} [label={_q(A.names[a])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
