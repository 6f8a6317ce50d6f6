"""Complete, right, left and mixed return words computed inside a factor set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import FactorSet, HorizonError, SpecularError, Word, invert


@dataclass(frozen=True)
class ReturnSet:
    """Return words found in a factor set.

    ``sufficient`` is False when some branch of the search reached the
    horizon without closing, in which case ``words`` may be missing elements.
    """

    words: frozenset
    sufficient: bool

    def __iter__(self):
        return iter(sorted(self.words, key=lambda w: (len(w), w)))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.words

    def formatted(self, alphabet) -> list[str]:
        return sorted(alphabet.format(w) for w in self.words)


def _has_internal(u: Word, X: frozenset, lengths: set[int]) -> bool:
    n = len(u)
    return any(u[i:i + k] in X for k in lengths for i in range(1, n - k))


def _is_complete_return(u: Word, X: frozenset, lengths: set[int]) -> bool:
    n = len(u)
    has_prefix = any(k < n and u[:k] in X for k in lengths)
    has_suffix = any(k < n and u[n - k:] in X for k in lengths)
    return has_prefix and has_suffix and not _has_internal(u, X, lengths)


def complete_return_set(S: FactorSet, X: Iterable[Sequence[int]]) -> ReturnSet:
    """Words of ``S`` with a proper prefix and a proper suffix in ``X`` and no internal factor in ``X``.

    The search extends each element of ``X`` to the right and stops a branch
    as soon as the word ends with an element of ``X``.
    """
    targets = frozenset(tuple(x) for x in X)
    if not targets or any(not x for x in targets):
        raise ValueError("targets must be nonempty words")
    lengths = {len(x) for x in targets}
    A = S.alphabet
    found: set[Word] = set()
    sufficient = True
    stack = [x for x in targets if x in S.words]
    while stack:
        u = stack.pop()
        n = len(u)
        if n == S.max_len:
            sufficient = False
            continue
        for a in range(A.size):
            v = u + (a,)
            if v not in S.words:
                continue
            m = n + 1
            if any(k < m and v[m - k:] in targets for k in lengths):
                if _is_complete_return(v, targets, lengths):
                    found.add(v)
                continue
            stack.append(v)
    return ReturnSet(frozenset(found), sufficient)


def _strict(result: ReturnSet, strict: bool, what: str) -> frozenset:
    if strict and not result.sufficient:
        raise HorizonError(f"insufficient horizon: some occurrence of {what} does not close")
    return result.words


def complete_returns(S: FactorSet, X: Iterable[Sequence[int]], strict: bool = True) -> frozenset:
    X = [tuple(x) for x in X]
    res = complete_return_set(S, X)
    return _strict(res, strict, "/".join(S.alphabet.format(x) for x in X))


def right_returns(S: FactorSet, x: Sequence[int], strict: bool = True) -> frozenset:
    """``x⁻¹·CR(x)``: strip the leading ``x`` from each complete return word."""
    x = tuple(x)
    return frozenset(u[len(x):] for u in complete_returns(S, [x], strict))


def left_returns(S: FactorSet, x: Sequence[int], strict: bool = True) -> frozenset:
    x = tuple(x)
    return frozenset(u[:-len(x)] for u in complete_returns(S, [x], strict))


def overlap(u: Word, v: Word) -> bool:
    """True if a nonempty suffix of one word is a prefix of the other."""
    for k in range(1, min(len(u), len(v)) + 1):
        if u[-k:] == v[:k] or v[-k:] == u[:k]:
            return True
    return False


def mixed_returns(S: FactorSet, w: Sequence[int], strict: bool = True) -> frozenset:
    """Words ``N(u)`` for ``u`` a complete return to ``{w, w⁻¹}``.

    ``N(u)`` erases a leading ``w`` and a trailing ``w⁻¹`` when present.
    """
    w = tuple(w)
    wi = invert(w, S.alphabet)
    if not w:
        raise ValueError("target must be nonempty")
    if w == wi:
        raise SpecularError(f"{S.alphabet.format(w)} is its own inverse")
    if overlap(w, wi):
        raise SpecularError(f"{S.alphabet.format(w)} overlaps its inverse")
    out = set()
    for u in complete_returns(S, [w, wi], strict):
        if u[:len(w)] == w:
            u = u[len(w):]
        if u[len(u) - len(wi):] == wi:
            u = u[:len(u) - len(wi)]
        out.add(u)
    return frozenset(out)


def is_valid_mixed_target(S: FactorSet, w: Sequence[int]) -> bool:
    w = tuple(w)
    wi = invert(w, S.alphabet)
    return bool(w) and w != wi and not overlap(w, wi)
