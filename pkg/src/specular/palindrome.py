"""Fullness and G-fullness of factor sets closed under a group of (anti)morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import FactorSet, HorizonError, SpecularError, SymmetricAlphabet, Word
from .generate import DoublingTransducer, derived_involution, reversal_closed, state_swap
from .returns import complete_return_set


@dataclass(frozen=True)
class LetterMap:
    """A letter permutation applied as a morphism, or as an antimorphism when ``anti`` is set."""

    perm: tuple[int, ...]
    anti: bool = False
    name: str = ""

    def __call__(self, w: Sequence[int]) -> Word:
        img = tuple(self.perm[a] for a in w)
        return img[::-1] if self.anti else img

    def then(self, other: "LetterMap") -> "LetterMap":
        """``other ∘ self``."""
        perm = tuple(other.perm[self.perm[a]] for a in range(len(self.perm)))
        return LetterMap(perm, self.anti != other.anti, f"{other.name}{self.name}")

    def is_identity(self) -> bool:
        return not self.anti and all(a == b for a, b in enumerate(self.perm))


@dataclass(frozen=True)
class SymmetryGroup:
    alphabet: SymmetricAlphabet
    elements: tuple[LetterMap, ...]

    @classmethod
    def generated_by(cls, alphabet: SymmetricAlphabet, gens: Iterable[LetterMap]) -> "SymmetryGroup":
        gens = list(gens)
        identity = LetterMap(tuple(range(alphabet.size)), False, "id")
        elems = {(identity.perm, identity.anti): identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for h in gens:
                    k = g.then(h)
                    key = (k.perm, k.anti)
                    if key not in elems:
                        elems[key] = k
                        nxt.append(k)
            frontier = nxt
        if len(elems) > 4:
            raise ValueError("symmetry groups have at most four elements here")
        out = sorted(elems.values(), key=lambda g: (not g.is_identity(), g.anti, g.perm))
        group = cls(alphabet, tuple(out))
        if not any(g.anti for g in group.elements):
            raise SpecularError("the symmetry group must contain an antimorphism")
        return group

    def nontrivial(self) -> tuple[LetterMap, ...]:
        return tuple(g for g in self.elements if not g.is_identity())


def reversal_group(alphabet: SymmetricAlphabet) -> SymmetryGroup:
    """``{id, reversal}``, the group behind ordinary fullness."""
    rev = LetterMap(tuple(range(alphabet.size)), True, "rev")
    return SymmetryGroup.generated_by(alphabet, [rev])


def transducer_group(t: DoublingTransducer) -> SymmetryGroup:
    """Group generated by ``σ: u ↦ u⁻¹`` and the state-swap morphism ``τ``."""
    A = derived_involution(t)
    sigma = LetterMap(A.inv, True, "σ")
    tau = LetterMap(state_swap(t), False, "τ")
    return SymmetryGroup.generated_by(A, [sigma, tau])


def orbit(w: Sequence[int], G: SymmetryGroup) -> frozenset:
    return frozenset(g(w) for g in G.elements)


def is_closed(S: FactorSet, G: SymmetryGroup) -> bool:
    return all(g(w) in S.words for w in S for g in G.nontrivial())


@dataclass(frozen=True)
class FullnessReport:
    ok: bool
    sufficient: bool
    checked: int
    witness: tuple | None = None


def g_fullness(S: FactorSet, G: SymmetryGroup, max_len: int | None = None) -> FullnessReport:
    """Check that every complete return word to every orbit of a short word is fixed by a nontrivial element.

    Orbits of words of length ``<= max_len`` (default ``L // 3``) are tested.
    """
    if not is_closed(S, G):
        raise SpecularError("factor set is not closed under the symmetry group")
    max_len = S.max_len // 3 if max_len is None else max_len
    seen: set[frozenset] = set()
    sufficient = True
    for w in S.nonempty():
        if len(w) > max_len:
            break
        X = orbit(w, G)
        if X in seen:
            continue
        seen.add(X)
        res = complete_return_set(S, X)
        sufficient &= res.sufficient
        for u in res:
            if not any(g(u) == u for g in G.nontrivial()):
                return FullnessReport(False, sufficient, len(seen), (w, u))
    return FullnessReport(True, sufficient, len(seen))


def is_g_full(S: FactorSet, G: SymmetryGroup, max_len: int | None = None) -> bool:
    rep = g_fullness(S, G, max_len)
    if rep.ok and not rep.sufficient:
        raise HorizonError("insufficient horizon: some complete return words did not close")
    return rep.ok


def is_palindrome(w: Sequence[int]) -> bool:
    w = tuple(w)
    return w == w[::-1]


def fullness(T: FactorSet, max_len: int | None = None) -> FullnessReport:
    """Every complete return word to a nonempty palindrome of length ``<= max_len`` is a palindrome."""
    if not reversal_closed(T):
        raise SpecularError("fullness needs a reversal-closed set")
    max_len = T.max_len // 3 if max_len is None else max_len
    sufficient = True
    checked = 0
    for p in T.nonempty():
        if len(p) > max_len:
            break
        if not is_palindrome(p):
            continue
        checked += 1
        res = complete_return_set(T, [p])
        sufficient &= res.sufficient
        for u in res:
            if not is_palindrome(u):
                return FullnessReport(False, sufficient, checked, (p, u))
    return FullnessReport(True, sufficient, checked)


def is_full(T: FactorSet, max_len: int | None = None) -> bool:
    rep = fullness(T, max_len)
    if rep.ok and not rep.sufficient:
        raise HorizonError("insufficient horizon: some complete return words did not close")
    return rep.ok
