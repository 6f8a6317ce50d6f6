"""Free products of copies of Z and Z/2: reduced elements, folded subgroup
graphs, index, type, Schreier bases, freeness and prime words."""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import EMPTY, FactorSet, SpecularError, SymmetricAlphabet, UnionFind, Word, invert, reduce
from .structure import ParityGraph


@dataclass(frozen=True)
class GroupElement:
    alphabet: SymmetricAlphabet
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", reduce(self.word, self.alphabet))

    @classmethod
    def parse(cls, alphabet: SymmetricAlphabet, text: str) -> "GroupElement":
        return cls(alphabet, alphabet.parse(text))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.alphabet, self.word + other.word)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.alphabet, invert(self.word, self.alphabet))

    def __str__(self):
        return self.alphabet.format(self.word) or "ε"


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


def inverse(g: GroupElement) -> GroupElement:
    return g.inverse()


@dataclass(frozen=True)
class GroupType:
    i: int
    j: int

    @property
    def symmetric_rank(self) -> int:
        return 2 * self.i + self.j

    def __iter__(self):
        return iter((self.i, self.j))


@dataclass(frozen=True)
class SubgroupGraph:
    """Folded graph of a subgroup; vertex 0 is the base.

    ``out[v]`` maps a letter to the target of the unique edge leaving ``v``
    with that label.  Vertices are numbered in breadth-first order from the
    base with letters in id order, so two graphs of the same subgroup compare
    equal.
    """

    alphabet: SymmetricAlphabet
    out: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def size(self) -> int:
        return len(self.out)

    def target(self, v: int, a: int) -> int | None:
        for b, t in self.out[v]:
            if b == a:
                return t
        return None

    def edges(self) -> list[tuple[int, int, int]]:
        return [(v, a, t) for v, row in enumerate(self.out) for a, t in row]

    def is_complete(self) -> bool:
        return all(len(row) == self.alphabet.size for row in self.out)

    def trace(self, w: Iterable[int], start: int = 0) -> int | None:
        v = start
        for a in w:
            v = self.target(v, a)
            if v is None:
                return None
        return v

    def contains(self, w: Sequence[int]) -> bool:
        """Membership of the group element ``w`` in the subgroup."""
        return self.trace(reduce(w, self.alphabet)) == 0

    def to_json(self) -> dict:
        A = self.alphabet
        return {
            "vertices": self.size,
            "edges": [[v, A.names[a], t] for v, a, t in self.edges()],
        }


def _canonical(alphabet: SymmetricAlphabet, adj: dict[int, dict[int, int]], base: int) -> SubgroupGraph:
    order = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for a in sorted(adj.get(v, {})):
            t = adj[v][a]
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    rows: list = [None] * len(order)
    for v, idx in order.items():
        rows[idx] = tuple(sorted((a, order[t]) for a, t in adj.get(v, {}).items()))
    return SubgroupGraph(alphabet, tuple(rows))


def fold(alphabet: SymmetricAlphabet, edges: Iterable[tuple[int, int, int]], base: int = 0) -> SubgroupGraph:
    """Fold a labelled graph until each vertex has at most one edge per letter.

    Each edge ``(u, a, v)`` also stands for ``(v, θ(a), u)``.  Passes over the
    edge list identify conflicting targets until a pass merges nothing.
    """
    inv = alphabet.inv
    directed = []
    for u, a, v in edges:
        directed.append((u, a, v))
        directed.append((v, inv[a], u))
    uf = UnionFind([base])
    while True:
        adj: dict[int, dict[int, int]] = {}
        merged = False
        for u, a, v in directed:
            u, v = uf.find(u), uf.find(v)
            row = adj.setdefault(u, {})
            t = row.get(a)
            if t is None:
                row[a] = v
            elif uf.find(t) != v:
                uf.union(t, v)
                merged = True
        if not merged:
            break
    return _canonical(alphabet, adj, uf.find(base))


def build_subgroup(alphabet: SymmetricAlphabet, generators: Iterable[Sequence[int]]) -> SubgroupGraph:
    """Folded graph of the subgroup generated by ``generators`` (a wedge of loops, folded)."""
    edges = []
    fresh = 1
    for g in generators:
        g = reduce(g, alphabet)
        if not g:
            continue
        prev = 0
        for k, a in enumerate(g):
            if k == len(g) - 1:
                nxt = 0
            else:
                nxt = fresh
                fresh += 1
            edges.append((prev, a, nxt))
            prev = nxt
    return fold(alphabet, edges, 0)


def index(g: SubgroupGraph) -> int | None:
    """Number of cosets when the folded graph is complete, otherwise None (infinite)."""
    return g.size if g.is_complete() else None


def _geometric_edges(g: SubgroupGraph) -> tuple[int, int]:
    inv = g.alphabet.inv
    seen = set()
    total = flips = 0
    for u, a, v in g.edges():
        if (u, a, v) in seen:
            continue
        seen.add((u, a, v))
        seen.add((v, inv[a], u))
        total += 1
        if u == v and inv[a] == a:
            flips += 1
    return total, flips


def kurosh_type(g: SubgroupGraph) -> GroupType:
    """Type ``(i, j)``: free factors and order-two factors of the subgroup."""
    total, flips = _geometric_edges(g)
    return GroupType(total - flips - (g.size - 1), flips)


def spanning_tree(g: SubgroupGraph) -> tuple[dict[int, Word], set[tuple[int, int, int]]]:
    """Breadth-first transversal words and the directed tree edges (both orientations)."""
    inv = g.alphabet.inv
    words = {0: EMPTY}
    tree: set = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for a, t in g.out[v]:
            if t not in words:
                words[t] = words[v] + (a,)
                tree.add((v, a, t))
                tree.add((t, inv[a], v))
                queue.append(t)
    return words, tree


def schreier_basis(g: SubgroupGraph) -> frozenset:
    """``{p a q⁻¹}`` over directed edges ``p -a-> q`` outside the spanning tree."""
    if not g.is_complete():
        raise SpecularError("Schreier basis needs a finite-index subgroup graph")
    A = g.alphabet
    words, tree = spanning_tree(g)
    out = set()
    for u, a, v in g.edges():
        if (u, a, v) not in tree:
            out.add(reduce(words[u] + (a,) + invert(words[v], A), A))
    return frozenset(out)


def even_subgroup_graph(alphabet: SymmetricAlphabet, P: ParityGraph) -> SubgroupGraph:
    """Two-vertex graph where odd letters swap the vertices and even letters are loops."""
    odd = P.odd_letters()
    if not odd:
        warnings.warn("no odd letter: the odd coset is unreachable and the set is not recurrent")
        return _canonical(alphabet, {0: {a: 0 for a in range(alphabet.size)}}, 0)
    adj = {v: {a: v ^ P.parity(a) for a in range(alphabet.size)} for v in (0, 1)}
    return _canonical(alphabet, adj, 0)


def full_group_graph(alphabet: SymmetricAlphabet) -> SubgroupGraph:
    return _canonical(alphabet, {0: {a: 0 for a in range(alphabet.size)}}, 0)


def _with_inverses(words: Iterable[Sequence[int]], alphabet: SymmetricAlphabet) -> list[Word]:
    out = {tuple(w) for w in words}
    out |= {invert(w, alphabet) for w in out}
    return sorted(out)


def is_basis_of_even_subgroup(R: Iterable[Sequence[int]], alphabet: SymmetricAlphabet, P: ParityGraph) -> bool:
    R = {tuple(r) for r in R}
    if len(R) != alphabet.size - 1:
        return False
    return build_subgroup(alphabet, _with_inverses(R, alphabet)) == even_subgroup_graph(alphabet, P)


def bounded_freeness(X: Iterable[Sequence[int]], alphabet: SymmetricAlphabet, k: int) -> bool:
    """No product ``x1⋯xm`` (``m <= k``, no adjacent mutually inverse factors) reduces to ε."""
    if k < 2:
        raise ValueError("k must be at least 2")
    X = sorted({tuple(x) for x in X})
    if any(not reduce(x, alphabet) for x in X):
        return False
    inv_of = {x: invert(x, alphabet) for x in X}
    longest = max((len(x) for x in X), default=0)
    inv = alphabet.inv

    def extend(stack: list[int], last: Word, depth: int) -> bool:
        for x in X:
            if inv_of[x] == last:
                continue
            grown = list(stack)
            for a in x:
                if grown and grown[-1] == inv[a]:
                    grown.pop()
                else:
                    grown.append(a)
            if not grown:
                return False
            remaining = k - depth - 1
            if remaining and len(grown) <= remaining * longest:
                if not extend(grown, x, depth + 1):
                    return False
        return True

    return extend([], None, 0)


def is_monoidal_basis(X: Iterable[Sequence[int]], g: SubgroupGraph, freeness_depth: int = 4) -> bool:
    """Symmetric ``X`` generating the subgroup of ``g`` freely (as a free product)."""
    A = g.alphabet
    X = {tuple(x) for x in X}
    if any(invert(x, A) not in X for x in X):
        raise SpecularError("monoidal basis check needs a symmetric set")
    h = build_subgroup(A, X)
    if h != g or len(X) != kurosh_type(h).symmetric_rank:
        return False
    return bounded_freeness(X, A, freeness_depth)


def prime_words(g: SubgroupGraph, S: FactorSet) -> frozenset:
    """Stored nonempty words that return to the base with no proper nonempty prefix doing so."""
    out = set()
    stack: list[tuple[Word, int]] = [(EMPTY, 0)]
    A = S.alphabet
    while stack:
        u, v = stack.pop()
        for a in range(A.size):
            w = u + (a,)
            if w not in S.words:
                continue
            t = g.target(v, a)
            if t is None:
                continue
            if t == 0:
                out.add(w)
            else:
                stack.append((w, t))
    return frozenset(out)


def _in_star(w: Word, X: frozenset, longest: int) -> bool:
    reach = [False] * (len(w) + 1)
    reach[0] = True
    for i in range(len(w)):
        if reach[i]:
            for j in range(i + 1, min(len(w), i + longest) + 1):
                if w[i:j] in X:
                    reach[j] = True
    return reach[len(w)]


@dataclass(frozen=True)
class SaturationReport:
    ok: bool
    prime_equals_code: bool
    witness: Word | None


def saturation(X: Iterable[Sequence[int]], S: FactorSet) -> SaturationReport:
    """Compare ``⟨X⟩ ∩ S`` with ``X* ∩ S`` over stored words, and prime words with ``X``."""
    A = S.alphabet
    X = frozenset(tuple(x) for x in X)
    g = build_subgroup(A, X)
    primes = prime_words(g, S)
    longest = max(len(x) for x in X)
    witness = None
    for w in S:
        if g.contains(w) != _in_star(w, X, longest):
            witness = w
            break
    same = primes == X
    return SaturationReport(same and witness is None, same, witness)


def saturation_check(X: Iterable[Sequence[int]], S: FactorSet) -> bool:
    return saturation(X, S).ok
