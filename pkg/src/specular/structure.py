"""Extension graphs, classification, complexity and parity of letters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    EMPTY,
    FactorSet,
    HorizonError,
    SpecularError,
    UnionFind,
    Word,
    all_reduced,
    check_flags,
    invert,
)


class NotSpecularError(SpecularError):
    """The extension graph of the empty word is not a pair of trees."""


@dataclass(frozen=True)
class ExtensionGraph:
    """Bipartite graph with left vertices ``left`` and right vertices ``right``.

    Vertices are words (single letters for ordinary extension graphs, code
    words for the generalized ones).  ``edges`` holds ``(left, right)`` pairs.
    """

    w: Word
    left: frozenset
    right: frozenset
    edges: frozenset

    @property
    def multiplicity(self) -> int:
        return len(self.edges) - len(self.left) - len(self.right) + 1

    def _union_find(self) -> UnionFind:
        uf = UnionFind([("L", x) for x in self.left] + [("R", y) for y in self.right])
        for x, y in self.edges:
            uf.union(("L", x), ("R", y))
        return uf

    def components(self) -> list[set]:
        return [set(g) for g in self._union_find().groups()]

    def is_acyclic(self) -> bool:
        n = len(self.left) + len(self.right)
        return len(self.edges) == n - len(self.components())

    def is_tree(self) -> bool:
        return self.is_acyclic() and len(self.components()) == 1


def extension_graph(S: FactorSet, w: Sequence[int]) -> ExtensionGraph:
    w = tuple(w)
    edges = S.biext(w)
    return ExtensionGraph(w, S.left_ext(w), S.right_ext(w), edges)


def multiplicity(S: FactorSet, w: Sequence[int]) -> int:
    """``m(w) = b(w) - ℓ(w) - r(w) + 1``."""
    return extension_graph(S, w).multiplicity


def characteristic(S: FactorSet) -> int:
    return 1 - multiplicity(S, EMPTY)


@dataclass(frozen=True)
class Classification:
    horizon: int
    acyclic: bool
    tree: bool
    neutral: bool
    characteristic: int
    components: int
    symmetric: bool
    reduced: bool
    specular: bool
    witness: str | None = None

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def classify(S: FactorSet) -> Classification:
    """Tree, neutrality and specularity verdicts, valid up to the horizon.

    Every extension graph of a word of length ``<= L-2`` is inspected.
    """
    if S.max_len < 3:
        raise HorizonError("classification needs a horizon of at least 3")
    A = S.alphabet
    acyclic = tree = neutral = True
    witness = None
    for n in range(S.max_len - 1):
        for w in S.of_length(n):
            g = extension_graph(S, w)
            if not g.is_acyclic():
                if acyclic:
                    witness = witness or f"extension graph of {A.format(w) or 'ε'} has a cycle"
                acyclic = tree = False
            elif w and not g.is_tree():
                witness = witness or f"extension graph of {A.format(w)} is disconnected"
                tree = False
            if w and g.multiplicity != 0:
                neutral = False
    root = extension_graph(S, EMPTY)
    comps = len(root.components())
    flags = check_flags(S)
    reduced = all_reduced(S)
    chi = 1 - root.multiplicity
    specular = flags["symmetric"] and reduced and tree and chi == 2
    return Classification(S.max_len, acyclic, tree, neutral, chi, comps,
                          flags["symmetric"], reduced, specular, witness)


@dataclass(frozen=True)
class Complexity:
    p: tuple[int, ...]
    s: tuple[int, ...]
    t: tuple[int, ...]
    consistent: bool

    def to_json(self) -> dict:
        return {"p": list(self.p), "s": list(self.s), "t": list(self.t), "consistent": self.consistent}


def complexity(S: FactorSet) -> Complexity:
    """Factor counts ``p_n`` and their first and second differences.

    ``consistent`` records the cross-checks ``s_n = Σ (r(w) - 1)`` and
    ``t_n = Σ m(w)`` over words of length ``n`` wherever the horizon allows.
    """
    L = S.max_len
    p = tuple(len(S.of_length(n)) for n in range(L + 1))
    s = tuple(p[n + 1] - p[n] for n in range(L))
    t = tuple(s[n + 1] - s[n] for n in range(L - 1))
    ok = True
    for n in range(L):
        if s[n] != sum(len(S.right_ext(w)) - 1 for w in S.of_length(n)):
            ok = False
    for n in range(L - 1):
        if t[n] != sum(multiplicity(S, w) for w in S.of_length(n)):
            ok = False
    return Complexity(p, s, t, ok)


def is_uniformly_recurrent(S: FactorSet, k: int | None = None) -> bool:
    """Witness uniform recurrence for words of length ``<= k`` (default ``max(1, L // 12)``).

    True when some length ``n <= L`` has every stored word of length ``n``
    containing every word of length ``<= k``.  A finite set cannot refute
    recurrence, so a missing window raises HorizonError.
    """
    k = max(1, S.max_len // 12) if k is None else k
    short = [w for w in S.nonempty() if len(w) <= k]
    for n in range(1, S.max_len + 1):
        long_words = S.of_length(n)
        if all(_occurs(u, v) for u in short for v in long_words):
            return True
    raise HorizonError(f"no recurrence window for words of length <= {k} within horizon {S.max_len}")


def _occurs(u: Word, v: Word) -> bool:
    k = len(u)
    return any(v[i:i + k] == u for i in range(len(v) - k + 1))


@dataclass(frozen=True)
class ParityGraph:
    """Edges ``(i, a, j)`` of the parity graph, one per letter."""

    edges: tuple[tuple[int, int, int], ...]

    def parity(self, a: int) -> int:
        i, _, j = self.edges[a]
        return 0 if i == j else 1

    def even_letters(self) -> list[int]:
        return [a for a in range(len(self.edges)) if self.parity(a) == 0]

    def odd_letters(self) -> list[int]:
        return [a for a in range(len(self.edges)) if self.parity(a) == 1]

    def path(self, w: Iterable[int]) -> tuple[int, int] | None:
        """``(i, j)`` if ``w`` labels a path from ``i`` to ``j``, else None.

        The empty word labels no particular path and gives None.
        """
        start = end = None
        for a in w:
            i, _, j = self.edges[a]
            if end is not None and end != i:
                return None
            if start is None:
                start = i
            end = j
        if start is None:
            return None
        return start, end

    def word_parity(self, w: Iterable[int]) -> int:
        """Number of odd letters of ``w`` modulo 2."""
        return sum(self.parity(a) for a in w) % 2

    def is_even(self, w: Iterable[int]) -> bool:
        return self.word_parity(w) == 0


def parity(S: FactorSet) -> ParityGraph:
    """Parity graph read off the two trees of ``ℰ(ε)``.

    Tree 0 is the one holding the left vertex of the smallest letter.  The
    edge of ``a`` goes from the tree of its right vertex to the tree of its
    left vertex, so that a word of ``S`` labels a path.
    """
    g = extension_graph(S, EMPTY)
    comps = g.components()
    if len(comps) != 2 or not g.is_acyclic():
        raise NotSpecularError(
            f"extension graph of ε has {len(comps)} components"
            + ("" if g.is_acyclic() else " and a cycle")
        )
    a0 = min(g.left)
    tree_of = {}
    for idx, comp in enumerate(sorted(comps, key=lambda c: ("L", a0) not in c)):
        for v in comp:
            tree_of[v] = idx
    edges = []
    for a in range(S.alphabet.size):
        if ("L", a) not in tree_of or ("R", a) not in tree_of:
            raise NotSpecularError(f"letter {S.alphabet.names[a]!r} is not biextendable")
        edges.append((tree_of[("R", a)], a, tree_of[("L", a)]))
    return ParityGraph(tuple(edges))


def in_part(P: ParityGraph, w: Word, i: int, j: int) -> bool:
    """Membership of a nonempty ``w`` in ``S_{i,j}``; the empty word is in ``S_{i,i}``."""
    if not w:
        return i == j
    return P.path(w) == (i, j)


def check_parity_symmetry(S: FactorSet, P: ParityGraph) -> bool:
    """``S_{i,j}⁻¹ = S_{1-j,1-i}`` on every stored nonempty word."""
    for w in S.nonempty():
        ij = P.path(w)
        if ij is None:
            return False
        i, j = ij
        if P.path(invert(w, S.alphabet)) != (1 - j, 1 - i):
            return False
    return True


def generalized_extension_graph(S: FactorSet, w: Sequence[int], X: Iterable[Word], Y: Iterable[Word]) -> ExtensionGraph:
    """Graph on ``{x ∈ X : xw ∈ S}`` and ``{y ∈ Y : wy ∈ S}`` with edges ``xwy ∈ S``."""
    w = tuple(w)
    X, Y = [tuple(x) for x in X], [tuple(y) for y in Y]
    need = len(w) + max(map(len, X), default=0) + max(map(len, Y), default=0)
    if need > S.max_len:
        raise HorizonError(f"insufficient horizon: need {need}, have {S.max_len}")
    left = frozenset(x for x in X if x + w in S.words)
    right = frozenset(y for y in Y if w + y in S.words)
    edges = frozenset((x, y) for x in left for y in right if x + w + y in S.words)
    return ExtensionGraph(w, left, right, edges)
