"""Bifix codes inside a factor set: parses, degree, maximality, even code,
decoding, incidence graph and coset automaton."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .core import (
    EMPTY,
    FactorSet,
    HorizonError,
    SpecularError,
    SymmetricAlphabet,
    UnionFind,
    Word,
    invert,
)
from .structure import ParityGraph, parity


def _proper_prefixes(w: Word) -> Iterable[Word]:
    return (w[:i] for i in range(len(w)))


def _proper_suffixes(w: Word) -> Iterable[Word]:
    return (w[i:] for i in range(1, len(w) + 1))


def is_prefix_code(words: Iterable[Word]) -> bool:
    ws = set(words)
    if EMPTY in ws:
        return False
    return not any(p in ws for w in ws for p in _proper_prefixes(w) if p)


def is_suffix_code(words: Iterable[Word]) -> bool:
    return is_prefix_code(tuple(reversed(w)) for w in words)


def is_bifix(words: Iterable[Word]) -> bool:
    ws = set(words)
    return is_prefix_code(ws) and is_suffix_code(ws)


@dataclass(frozen=True)
class BifixCode:
    """A finite bifix code with its proper prefixes ``P`` and proper suffixes ``Q``.

    Both ``P`` and ``Q`` contain the empty word.
    """

    alphabet: SymmetricAlphabet
    words: frozenset

    def __post_init__(self):
        ws = frozenset(tuple(w) for w in self.words)
        object.__setattr__(self, "words", ws)
        if not is_bifix(ws):
            raise ValueError("not a bifix code")

    @classmethod
    def parse(cls, alphabet: SymmetricAlphabet, words: Iterable[str]) -> "BifixCode":
        return cls(alphabet, frozenset(alphabet.parse(w) for w in words))

    def __contains__(self, w) -> bool:
        return tuple(w) in self.words

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), w)))

    def __len__(self) -> int:
        return len(self.words)

    @cached_property
    def prefixes(self) -> frozenset:
        return frozenset(p for w in self.words for p in _proper_prefixes(w))

    @cached_property
    def suffixes(self) -> frozenset:
        return frozenset(s for w in self.words for s in _proper_suffixes(w)) | {EMPTY}

    @property
    def max_len(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def is_symmetric(self) -> bool:
        return all(invert(w, self.alphabet) in self.words for w in self.words)

    def inverse(self) -> "BifixCode":
        return BifixCode(self.alphabet, frozenset(invert(w, self.alphabet) for w in self.words))

    def formatted(self) -> list[str]:
        return sorted(self.alphabet.format(w) for w in self.words)

    def to_json(self) -> dict:
        return {"alphabet": self.alphabet.to_json(), "words": self.formatted()}


def _star_reach(X: BifixCode, w: Word, start: int) -> set[int]:
    # end positions j such that w[start:j] factors over X
    reach = {start}
    todo = [start]
    k = X.max_len
    while todo:
        i = todo.pop()
        for j in range(i + 1, min(len(w), i + k) + 1):
            if w[i:j] in X.words and j not in reach:
                reach.add(j)
                todo.append(j)
    return reach


def parse_count(w: Sequence[int], X: BifixCode) -> int:
    """Number of triples ``(q, x, p)`` with ``w = qxp``, ``q`` in Q, ``x`` in X*, ``p`` in P."""
    w = tuple(w)
    total = 0
    for i in range(len(w) + 1):
        if w[:i] not in X.suffixes:
            continue
        for j in _star_reach(X, w, i):
            if w[j:] in X.prefixes:
                total += 1
    return total


def degree(X: BifixCode, S: FactorSet) -> int:
    """Largest number of parses of a stored word (valid up to the horizon)."""
    return max(parse_count(w, X) for w in S)


def internal_factors(X: BifixCode) -> set[Word]:
    out: set[Word] = set()
    for x in X.words:
        for i in range(1, len(x)):
            for j in range(i, len(x)):
                out.add(x[i:j])
    return out


def kernel(X: BifixCode) -> frozenset:
    """Elements of ``X`` that are internal factors of ``X``."""
    inner = internal_factors(X)
    return frozenset(x for x in X.words if x in inner)


@dataclass(frozen=True)
class MaximalityReport:
    maximal: bool
    comparable: bool
    degree: int
    degree_stable: bool
    witness: Word | None = None


def maximality(X: BifixCode, S: FactorSet) -> MaximalityReport:
    """S-maximality of ``X`` at the horizon, with the parse-count cross-check.

    ``comparable`` says that every stored word is prefix- or suffix-comparable
    with some element of ``X``; checking lengths up to ``max|X|`` suffices.
    ``degree_stable`` says that every stored word of length ``>= max|X|`` has
    the full number of parses, which is the internal-factor criterion.
    """
    k = X.max_len
    if k > S.max_len:
        raise HorizonError(f"insufficient horizon: code words reach length {k}, have {S.max_len}")
    if not all(x in S.words for x in X.words):
        raise ValueError("code is not contained in the factor set")
    witness = _incomparable(X, S)
    d = degree(X, S)
    stable = all(parse_count(w, X) == d for n in range(k, S.max_len + 1) for w in S.of_length(n))
    comparable = witness is None
    return MaximalityReport(comparable and stable, comparable, d, stable, witness)


def _incomparable(X: BifixCode, S: FactorSet) -> Word | None:
    # shortest stored word that could be adjoined without breaking bifixity
    words, prefixes, suffixes = X.words, X.prefixes, X.suffixes
    for n in range(1, min(X.max_len, S.max_len) + 1):
        for w in S.of_length(n):
            if w in prefixes or w in suffixes:
                continue
            if any(w[:i] in words or w[-i:] in words for i in range(1, n + 1)):
                continue
            return w
    return None


def is_s_maximal(X: BifixCode, S: FactorSet) -> bool:
    return maximality(X, S).maximal


def layer_code(S: FactorSet, n: int) -> BifixCode:
    """``S ∩ Aⁿ``."""
    return BifixCode(S.alphabet, frozenset(S.of_length(n)))


def even_code(S: FactorSet, P: ParityGraph | None = None) -> BifixCode:
    """Even words of ``S`` with no nonempty proper even prefix."""
    P = P or parity(S)
    out = set()
    layer = [w for w in S.of_length(1)]
    n = 1
    while layer:
        nxt = []
        for w in layer:
            if P.is_even(w):
                out.add(w)
            elif n == S.max_len:
                raise HorizonError(f"insufficient horizon: odd prefix {S.alphabet.format(w)} not closed")
            else:
                nxt.extend(v for v in S.of_length(n + 1) if v[:-1] == w)
        layer = nxt
        n += 1
    return BifixCode(S.alphabet, frozenset(out))


@dataclass(frozen=True)
class CodingMorphism:
    """Bijection from a source alphabet onto a code."""

    source: tuple[str, ...]
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.source) != len(self.images) or len(set(self.images)) != len(self.images):
            raise ValueError("a coding morphism must be a bijection onto its code")

    @classmethod
    def default(cls, X: BifixCode) -> "CodingMorphism":
        """Letters ``a, b, c, ...`` assigned to the code words in lexicographic order of names."""
        ordered = sorted(X.words, key=X.alphabet.format)
        if len(ordered) <= 26:
            names = tuple(chr(ord("a") + i) for i in range(len(ordered)))
        else:
            names = tuple(f"x{i}" for i in range(len(ordered)))
        return cls(names, tuple(ordered))

    @classmethod
    def from_strings(cls, alphabet: SymmetricAlphabet, mapping: Mapping[str, str]) -> "CodingMorphism":
        names = tuple(mapping)
        return cls(names, tuple(alphabet.parse(mapping[n]) for n in names))

    def apply(self, y: Iterable[int]) -> Word:
        out: list[int] = []
        for b in y:
            out.extend(self.images[b])
        return tuple(out)

    def code(self, alphabet: SymmetricAlphabet) -> BifixCode:
        return BifixCode(alphabet, frozenset(self.images))


def decode(S: FactorSet, f: CodingMorphism, P: ParityGraph | None = None) -> tuple[FactorSet, FactorSet]:
    """``f⁻¹(S_{0,0})`` and ``f⁻¹(S_{1,1})`` over the two halves of the source alphabet.

    The decoded horizon is ``L // max|f(b)|``, so every decoded word maps to a
    stored word.
    """
    P = P or parity(S)
    X = even_code(S, P)
    if set(f.images) != set(X.words):
        raise ValueError("coding morphism does not code the even code")
    k = max(len(x) for x in f.images)
    L = S.max_len // k
    halves = []
    for side in (0, 1):
        letters = [b for b, x in enumerate(f.images) if P.path(x) == (side, side)]
        alphabet = SymmetricAlphabet.identity([f.source[b] for b in letters])
        local = {b: i for i, b in enumerate(letters)}
        words: set[Word] = {EMPTY}
        layer = [EMPTY]
        for _ in range(L):
            nxt = []
            for y in layer:
                for b in letters:
                    v = y + (b,)
                    if f.apply(v) in S.words:
                        nxt.append(v)
            layer = nxt
            words.update(tuple(local[b] for b in y) for y in layer)
        halves.append(FactorSet(alphabet, L, frozenset(words)))
    return halves[0], halves[1]


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph on nonempty proper prefixes and suffixes; ``(p, q)`` is an edge when ``pq`` is in the code."""

    prefixes: frozenset
    suffixes: frozenset
    edges: frozenset


def incidence_graph(X: BifixCode) -> IncidenceGraph:
    pre = frozenset(p for p in X.prefixes if p)
    suf = frozenset(s for s in X.suffixes if s)
    edges = frozenset((x[:i], x[i:]) for x in X.words for i in range(1, len(x)))
    return IncidenceGraph(pre, suf, edges)


def coset_classes(X: BifixCode) -> dict[Word, int]:
    """Class index of each proper prefix under the coset equivalence.

    Classes are the connected components of the incidence graph with each
    prefix node ``p`` glued to the suffix node ``p⁻¹``; the empty word is a
    class of its own and always gets index 0.
    """
    if not X.is_symmetric():
        raise SpecularError("coset equivalence needs a symmetric code")
    G = incidence_graph(X)
    uf = UnionFind([("P", p) for p in G.prefixes] + [("Q", q) for q in G.suffixes])
    for p, q in G.edges:
        uf.union(("P", p), ("Q", q))
    for p in G.prefixes:
        uf.union(("P", p), ("Q", invert(p, X.alphabet)))
    index: dict = {}
    out = {EMPTY: 0}
    for p in sorted(G.prefixes, key=lambda w: (len(w), w)):
        root = uf.find(("P", p))
        if root not in index:
            index[root] = len(index) + 1
        out[p] = index[root]
    return out


@dataclass(frozen=True)
class CosetAutomaton:
    """States are coset classes (0 is the class of the empty word)."""

    alphabet: SymmetricAlphabet
    classes: dict = field(hash=False, compare=False)
    transitions: frozenset

    @property
    def states(self) -> list[int]:
        return sorted(set(self.classes.values()))

    def is_deterministic(self) -> bool:
        seen = {}
        for s, a, t in self.transitions:
            if seen.setdefault((s, a), t) != t:
                return False
        return True

    def is_codeterministic(self) -> bool:
        seen = {}
        for s, a, t in self.transitions:
            if seen.setdefault((t, a), s) != s:
                return False
        return True

    def is_reversible(self) -> bool:
        return self.is_deterministic() and self.is_codeterministic()

    def members(self, state: int) -> list[Word]:
        return sorted((p for p, c in self.classes.items() if c == state), key=lambda w: (len(w), w))


def coset_automaton(X: BifixCode) -> CosetAutomaton:
    classes = coset_classes(X)
    edges = set()
    for p, s in classes.items():
        for a in range(X.alphabet.size):
            pa = p + (a,)
            if pa in classes:
                edges.add((s, a, classes[pa]))
            elif pa in X.words:
                edges.add((s, a, 0))
    return CosetAutomaton(X.alphabet, classes, frozenset(edges))


def is_reversible(C: CosetAutomaton) -> bool:
    return C.is_reversible()


def symmetric_completion(X: BifixCode, S: FactorSet) -> BifixCode:
    """Greedily adjoin pairs ``{w, w⁻¹}`` (shortest, then smallest) until S-maximal."""
    if not X.is_symmetric():
        raise SpecularError("completion needs a symmetric code")
    A = S.alphabet
    current = set(X.words)
    for w in S.nonempty():
        if w in current:
            continue
        if _incomparable(BifixCode(A, frozenset(current)), S) is None:
            break
        trial = current | {w, invert(w, A)}
        if invert(w, A) in S.words and is_bifix(trial):
            current = trial
    Z = BifixCode(A, frozenset(current))
    if not is_s_maximal(Z, S):
        raise HorizonError("horizon exhausted before the completion became S-maximal")
    return Z
