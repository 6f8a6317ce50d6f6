"""Factor sets of substitution fixed points and of doubling-transducer images."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import EMPTY, FactorSet, SymmetricAlphabet, Word, factors, reverse

MAX_EXPANSION = 1 << 22


@dataclass(frozen=True)
class Morphism:
    """A substitution on a single alphabet, given by the image of each letter."""

    alphabet: SymmetricAlphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.alphabet.size:
            raise ValueError("one image per letter is required")
        for img in self.images:
            if not img:
                raise ValueError("erasing morphisms are not supported")
            self.alphabet.check(img)

    @classmethod
    def from_strings(cls, alphabet: SymmetricAlphabet, images: Mapping[str, str]) -> "Morphism":
        missing = set(alphabet.names) - set(images)
        if missing:
            raise ValueError(f"no image given for {sorted(missing)}")
        return cls(alphabet, tuple(alphabet.parse(images[n]) for n in alphabet.names))

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for a in w:
            out.extend(self.images[a])
        return tuple(out)

    def compose(self, other: "Morphism") -> "Morphism":
        """``self ∘ other``."""
        return Morphism(self.alphabet, tuple(self.apply(img) for img in other.images))

    def power(self, n: int) -> "Morphism":
        m = self
        for _ in range(n - 1):
            m = self.compose(m)
        return m

    def to_json(self) -> dict:
        fmt = self.alphabet.format
        return {n: fmt(img) for n, img in zip(self.alphabet.names, self.images)}


def _legal_pairs(m: Morphism, seed: int) -> set[Word]:
    # two-letter factors of the fixed point: each one sits inside the image of
    # an earlier two-letter factor, so this closure is exact
    start = m.apply(m.apply((seed,)))
    todo = [start[i:i + 2] for i in range(len(start) - 1)]
    seen: set[Word] = set()
    while todo:
        uv = todo.pop()
        if uv in seen:
            continue
        seen.add(uv)
        img = m.apply(uv)
        todo.extend(img[i:i + 2] for i in range(len(img) - 1))
    return seen


def fixed_point_factors(m: Morphism, seed: int, L: int) -> FactorSet:
    """All factors of length ``<= L`` of the fixed point ``m^ω(seed)``.

    Once every letter image under ``m^k`` has length ``>= L``, every length-L
    factor of the fixed point lies inside ``m^k(uv)`` for some two-letter factor
    ``uv``; that makes the enumeration exact.  Morphisms where some occurring
    letter never grows fall back to expanding a prefix until the factor counts
    stop changing.
    """
    img = m.images[seed]
    if len(img) < 2 or img[0] != seed:
        raise ValueError(f"morphism is not prolongable on {m.alphabet.names[seed]!r}")
    pairs = _legal_pairs(m, seed)
    occurring = sorted({a for uv in pairs for a in uv})
    words: set[Word] = {EMPTY}

    power = {a: (a,) for a in occurring}
    for _ in range(64):
        if min(len(w) for w in power.values()) >= L:
            break
        power = {a: m.apply(w) for a, w in power.items()}
    if min(len(w) for w in power.values()) >= L:
        for u, v in pairs:
            words |= factors(power[u] + power[v], L)
        return FactorSet(m.alphabet, L, frozenset(words))

    prefix: Word = (seed,)
    previous = -1
    while len(prefix) <= MAX_EXPANSION:
        prefix = m.apply(prefix)
        if len(prefix) < max(4 * L, 64):
            continue
        found = factors(prefix, L)
        if len(found) == previous:
            return FactorSet(m.alphabet, L, frozenset(found))
        previous = len(found)
    raise ValueError("fixed-point expansion did not stabilise within the hard cap")


@dataclass(frozen=True)
class DoublingTransducer:
    """Two-state transducer whose input letters permute the states.

    ``edges[i][alpha] = (output, next)`` is the edge leaving state ``i`` on
    input letter ``alpha``.
    """

    input_alphabet: SymmetricAlphabet
    output_names: tuple[str, ...]
    edges: tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]

    def __post_init__(self):
        k = self.input_alphabet.size
        if len(self.output_names) != 2 * k:
            raise ValueError("output alphabet must have twice as many letters as the input")
        outs = [self.edges[i][al][0] for i in (0, 1) for al in range(k)]
        if sorted(outs) != list(range(2 * k)):
            raise ValueError("output labels must be pairwise distinct and cover the output alphabet")
        for al in range(k):
            q0, q1 = self.edges[0][al][1], self.edges[1][al][1]
            if {q0, q1} != {0, 1}:
                raise ValueError(
                    f"input letter {self.input_alphabet.names[al]!r} does not act as a permutation"
                )

    @classmethod
    def from_edges(cls, input_alphabet: SymmetricAlphabet, edges) -> "DoublingTransducer":
        """Build from ``[state, input, output, next]`` rows (names for letters)."""
        out_names: list[str] = []
        table: list[list] = [[None] * input_alphabet.size for _ in range(2)]
        for state, inp, out, nxt in edges:
            if out not in out_names:
                out_names.append(out)
            al = input_alphabet.index(inp) if isinstance(inp, str) else int(inp)
            if table[int(state)][al] is not None:
                raise ValueError(f"two edges leave state {state} on {inp!r}")
            table[int(state)][al] = (out_names.index(out), int(nxt))
        if any(e is None for row in table for e in row):
            raise ValueError("every state needs one edge per input letter")
        order = sorted(range(len(out_names)), key=lambda i: out_names[i])
        remap = {old: new for new, old in enumerate(order)}
        names = tuple(out_names[i] for i in order)
        edges_t = tuple(tuple((remap[o], q) for o, q in row) for row in table)
        return cls(input_alphabet, names, edges_t)

    def to_json(self) -> dict:
        rows = []
        for i in (0, 1):
            for al, (o, q) in enumerate(self.edges[i]):
                rows.append([i, self.input_alphabet.names[al], self.output_names[o], q])
        return {"input": list(self.input_alphabet.names), "edges": rows}

    def run(self, state: int, u: Word) -> tuple[Word, int]:
        """Output of the path from ``state`` reading ``u``, and its end state."""
        out = []
        for al in u:
            o, state = self.edges[state][al]
            out.append(o)
        return tuple(out), state

    def delta(self, state: int, u: Word) -> Word:
        return self.run(state, u)[0]

    def edge_of(self, letter: int) -> tuple[int, int, int]:
        """``(i, alpha, j)`` for the edge whose output is ``letter``."""
        for i in (0, 1):
            for al, (o, q) in enumerate(self.edges[i]):
                if o == letter:
                    return i, al, q
        raise ValueError(f"no edge outputs letter id {letter}")


def derived_involution(t: DoublingTransducer) -> SymmetricAlphabet:
    """Involution pairing each output letter with the output of the edge from ``1-j``."""
    inv = []
    for a in range(len(t.output_names)):
        _, al, j = t.edge_of(a)
        inv.append(t.edges[1 - j][al][0])
    return SymmetricAlphabet(t.output_names, tuple(inv))


def state_swap(t: DoublingTransducer) -> tuple[int, ...]:
    """Letter map sending the output of ``(i, alpha)`` to the output of ``(1-i, alpha)``."""
    out = []
    for a in range(len(t.output_names)):
        i, al, _ = t.edge_of(a)
        out.append(t.edges[1 - i][al][0])
    return tuple(out)


def doubling_image(t: DoublingTransducer, T: FactorSet) -> FactorSet:
    """``δ0(T) ∪ δ1(T)`` as a factor set over the output alphabet."""
    if T.alphabet.size != t.input_alphabet.size:
        raise ValueError("factor set and transducer use different input alphabets")
    alphabet = derived_involution(t)
    words = {t.delta(i, u) for u in T for i in (0, 1)}
    return FactorSet.from_words(alphabet, words, T.max_len)


def reversal_closed(T: FactorSet) -> bool:
    return all(reverse(w) in T.words for w in T)
