"""Alphabets with an involution, reduced words and truncated factor sets.

Letters are dense integer ids ``0..size-1`` and a word is a plain tuple of
ids.  The involution is stored as a lookup table, so inverting a letter is an
index operation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


class SpecularError(Exception):
    """Base class for errors raised by this package."""


class HorizonError(SpecularError):
    """A query needs words longer than the stored horizon."""


@dataclass(frozen=True)
class SymmetricAlphabet:
    """A finite alphabet together with an involution ``inv`` on letter ids."""

    names: tuple[str, ...]
    inv: tuple[int, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        inv = tuple(int(i) for i in self.inv)
        if not names:
            raise ValueError("alphabet must have at least one letter")
        if len(set(names)) != len(names):
            raise ValueError("letter names must be pairwise distinct")
        if any(not n for n in names):
            raise ValueError("letter names must be nonempty")
        if len(inv) != len(names):
            raise ValueError("inv table has the wrong size")
        for a, b in enumerate(inv):
            if not 0 <= b < len(names) or inv[b] != a:
                raise ValueError(f"inv is not an involution at letter {names[a]!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    # construction helpers

    @classmethod
    def identity(cls, names: Sequence[str]) -> "SymmetricAlphabet":
        """Alphabet where every letter is its own inverse."""
        return cls(tuple(names), tuple(range(len(names))))

    @classmethod
    def free(cls, names: Sequence[str]) -> "SymmetricAlphabet":
        """Alphabet ``B ∪ B⁻¹`` with inverses named ``x'``."""
        names = list(names)
        k = len(names)
        full = names + [n + "'" for n in names]
        inv = [i + k for i in range(k)] + list(range(k))
        return cls(tuple(full), tuple(inv))

    @classmethod
    def from_pairs(cls, names: Sequence[str], pairs: dict[str, str] | None = None) -> "SymmetricAlphabet":
        """Build from names and a partial map of swapped letters; others are fixed.

        Names of the form ``x'`` with ``x`` also present are paired with ``x``
        unless ``pairs`` says otherwise.
        """
        names = list(names)
        index = {n: i for i, n in enumerate(names)}
        inv = list(range(len(names)))
        explicit = dict(pairs or {})
        for n in names:
            if n.endswith("'") and n[:-1] in index and n not in explicit and n[:-1] not in explicit:
                explicit[n[:-1]] = n
        for x, y in explicit.items():
            i, j = index[x], index[y]
            if (inv[i] != i and inv[i] != j) or (inv[j] != j and inv[j] != i):
                raise ValueError(f"conflicting involution data for {x!r}/{y!r}")
            inv[i], inv[j] = j, i
        return cls(tuple(names), tuple(inv))

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown letter {name!r}") from None

    def fixed_points(self) -> list[int]:
        return [a for a in range(self.size) if self.inv[a] == a]

    # words

    def parse(self, text: str | Sequence[str]) -> Word:
        """Parse a word given as a string of names or as a sequence of names.

        Whitespace separates tokens; inside a token, names are matched greedily
        (longest name first), so ``"ab'c"`` parses over ``{a, b, b', c}``.
        """
        if not isinstance(text, str):
            return tuple(self.index(n) for n in text)
        out: list[int] = []
        longest = max(len(n) for n in self.names)
        for token in text.split():
            pos = 0
            while pos < len(token):
                for size in range(min(longest, len(token) - pos), 0, -1):
                    letter = self._index.get(token[pos:pos + size])
                    if letter is not None:
                        out.append(letter)
                        pos += size
                        break
                else:
                    raise ValueError(f"cannot parse {token!r} at position {pos}")
        return tuple(out)

    def format(self, w: Iterable[int]) -> str:
        return "".join(self.names[a] for a in w)

    def check(self, w: Word) -> None:
        for a in w:
            if not 0 <= a < self.size:
                raise ValueError(f"letter id {a} outside alphabet of size {self.size}")

    # serialization

    def to_json(self) -> dict:
        return {"letters": list(self.names), "inv": [self.names[b] for b in self.inv]}

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricAlphabet":
        names = list(data["letters"])
        raw = data.get("inv")
        if raw is None:
            return cls.from_pairs(names)
        index = {n: i for i, n in enumerate(names)}
        inv = [index[x] if isinstance(x, str) else int(x) for x in raw]
        return cls(tuple(names), tuple(inv))


def reverse(w: Word) -> Word:
    return tuple(reversed(w))


def invert(w: Word, alphabet: SymmetricAlphabet) -> Word:
    """Inverse of ``w`` in the group: reverse and apply the involution letterwise."""
    inv = alphabet.inv
    return tuple(inv[a] for a in reversed(w))


def reduce(w: Iterable[int], alphabet: SymmetricAlphabet) -> Word:
    """Free reduction: delete factors ``a·θ(a)`` until none is left."""
    inv = alphabet.inv
    stack: list[int] = []
    for a in w:
        if stack and stack[-1] == inv[a]:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def is_reduced(w: Word, alphabet: SymmetricAlphabet) -> bool:
    inv = alphabet.inv
    return all(inv[w[i]] != w[i + 1] for i in range(len(w) - 1))


def factors(w: Word, max_len: int | None = None) -> set[Word]:
    n = len(w)
    top = n if max_len is None else min(n, max_len)
    out = {EMPTY}
    for size in range(1, top + 1):
        for i in range(n - size + 1):
            out.add(w[i:i + size])
    return out


@dataclass(frozen=True)
class FactorSet:
    """All words of a factorial language up to length ``max_len``.

    Instances are sealed: construction closes the given words under taking
    factors, and nothing mutates them afterwards.
    """

    alphabet: SymmetricAlphabet
    max_len: int
    words: frozenset
    _by_len: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.max_len < 0:
            raise ValueError("max_len must be nonnegative")
        by_len: list[list[Word]] = [[] for _ in range(self.max_len + 1)]
        for w in self.words:
            if len(w) > self.max_len:
                raise ValueError(f"word of length {len(w)} exceeds horizon {self.max_len}")
            by_len[len(w)].append(w)
        object.__setattr__(self, "_by_len", tuple(tuple(sorted(ws)) for ws in by_len))

    @classmethod
    def from_words(cls, alphabet: SymmetricAlphabet, words: Iterable[Word], max_len: int) -> "FactorSet":
        """Seal ``words`` (truncated to ``max_len``) under taking factors."""
        closed: set[Word] = {EMPTY}
        for w in words:
            w = tuple(w)
            alphabet.check(w)
            if w in closed:
                continue
            closed |= factors(w, max_len)
        return cls(alphabet, max_len, frozenset(closed))

    def __contains__(self, w) -> bool:
        return tuple(w) in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        for ws in self._by_len:
            yield from ws

    def of_length(self, n: int) -> tuple[Word, ...]:
        if n > self.max_len:
            raise HorizonError(f"length {n} beyond horizon {self.max_len}")
        return self._by_len[n]

    def nonempty(self) -> Iterator[Word]:
        for ws in self._by_len[1:]:
            yield from ws

    def letters(self) -> list[int]:
        return sorted(w[0] for w in self._by_len[1]) if self.max_len >= 1 else []

    def truncate(self, max_len: int) -> "FactorSet":
        if max_len > self.max_len:
            raise HorizonError(f"cannot extend horizon {self.max_len} to {max_len}")
        return FactorSet(self.alphabet, max_len, frozenset(w for w in self.words if len(w) <= max_len))

    # extensions

    def _need(self, w: Word, extra: int) -> None:
        if len(w) + extra > self.max_len:
            raise HorizonError(
                f"insufficient horizon: |w|={len(w)} needs max_len >= {len(w) + extra}, have {self.max_len}"
            )

    def left_ext(self, w: Word) -> frozenset:
        w = tuple(w)
        self._need(w, 1)
        return frozenset(a for a in range(self.alphabet.size) if (a,) + w in self.words)

    def right_ext(self, w: Word) -> frozenset:
        w = tuple(w)
        self._need(w, 1)
        return frozenset(a for a in range(self.alphabet.size) if w + (a,) in self.words)

    def biext(self, w: Word) -> frozenset:
        w = tuple(w)
        self._need(w, 2)
        k = self.alphabet.size
        return frozenset(
            (a, b)
            for a in self.left_ext(w)
            for b in range(k)
            if (a,) + w + (b,) in self.words
        )

    # serialization

    def to_json(self) -> dict:
        fmt = self.alphabet.format
        return {
            "alphabet": self.alphabet.to_json(),
            "max_len": self.max_len,
            "words": [fmt(w) for w in self],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FactorSet":
        alphabet = SymmetricAlphabet.from_json(data["alphabet"])
        words = [alphabet.parse(s) for s in data["words"]]
        return cls.from_words(alphabet, words, int(data["max_len"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False)


def check_flags(S: FactorSet) -> dict[str, bool]:
    """Report whether ``S`` is factorial, biextendable and symmetric at its horizon."""
    words = S.words
    factorial = EMPTY in words and all(w[1:] in words and w[:-1] in words for w in S.nonempty())
    if S.max_len >= 1:
        factorial = factorial and len(S.of_length(1)) == S.alphabet.size
    biext = all(
        any((a,) + w + (b,) in words for a in range(S.alphabet.size) for b in range(S.alphabet.size))
        for n in range(0, S.max_len - 1)
        for w in S.of_length(n)
    )
    symmetric = all(invert(w, S.alphabet) in words for w in S)
    return {"factorial": factorial, "biextendable": biext, "symmetric": symmetric}


def all_reduced(S: FactorSet) -> bool:
    return all(is_reduced(w, S.alphabet) for w in S.of_length(min(2, S.max_len)))


class UnionFind:
    """Disjoint sets over hashable items, with path halving."""

    def __init__(self, items: Iterable = ()):
        self.parent: dict = {}
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        self.add(x)
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())
