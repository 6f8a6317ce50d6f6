"""Built-in example data shipped as JSON next to the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import FactorSet, SymmetricAlphabet
from .generate import DoublingTransducer, Morphism, derived_involution, doubling_image, fixed_point_factors
from .involution import LinearInvolution, natural_coding

FIXTURE_ORDER = (
    "fibonacci",
    "cassaigne",
    "doubled-fibonacci",
    "fibonacci-split",
    "golden-involution",
    "doubled-involution",
    "even-length-subgroup",
    "stabilizer-subgroup",
)


def load_morphism(data: dict) -> tuple[Morphism, int]:
    """Morphism and seed letter from a JSON description.

    Accepts ``{"images": {...}, "inv": ..., "seed": ...}`` or the flat form
    ``{"a": "ab", ...}`` (letters fixed by the involution, seed = first letter).
    """
    if "images" in data:
        images = data["images"]
        if "alphabet" in data:
            alphabet = SymmetricAlphabet.from_json(data["alphabet"])
        else:
            names = list(images)
            inv = data.get("inv")
            if isinstance(inv, dict):
                alphabet = SymmetricAlphabet.from_pairs(names, inv)
            elif inv is not None:
                alphabet = SymmetricAlphabet.from_json({"letters": names, "inv": inv})
            else:
                alphabet = SymmetricAlphabet.from_pairs(names)
        seed = data.get("seed", alphabet.names[0])
    else:
        images = data
        alphabet = SymmetricAlphabet.from_pairs(list(images))
        seed = alphabet.names[0]
    return Morphism.from_strings(alphabet, images), alphabet.index(seed)


def load_transducer(data: dict) -> DoublingTransducer:
    inputs = data["input"]
    alphabet = SymmetricAlphabet.identity(inputs)
    return DoublingTransducer.from_edges(alphabet, data["edges"])


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    data: dict

    @property
    def horizon(self) -> int:
        return int(self.data.get("horizon", 10))

    @property
    def suites(self) -> tuple[str, ...]:
        return tuple(self.data.get("suites", ()))

    def morphism(self) -> tuple[Morphism, int]:
        if self.kind == "morphism":
            return load_morphism(self.data)
        if self.kind == "transducer" and "morphism" in self.data:
            t = self.transducer()
            alphabet = derived_involution(t)
            m = Morphism.from_strings(alphabet, self.data["morphism"])
            return m, alphabet.index(self.data.get("seed", alphabet.names[0]))
        raise ValueError(f"fixture {self.name!r} has no morphism")

    def transducer(self) -> DoublingTransducer:
        if self.kind != "transducer":
            raise ValueError(f"fixture {self.name!r} has no transducer")
        return load_transducer(self.data["transducer"])

    def involution(self) -> LinearInvolution:
        if self.kind != "involution":
            raise ValueError(f"fixture {self.name!r} has no linear involution")
        return LinearInvolution.from_json(self.data["involution"])

    def alphabet(self) -> SymmetricAlphabet:
        if self.kind == "group" or "alphabet" in self.data:
            return SymmetricAlphabet.from_json(self.data["alphabet"])
        return self.factor_set(1).alphabet

    def generators(self) -> list[tuple[int, ...]]:
        A = self.alphabet()
        return [A.parse(g) for g in self.data.get("generators", [])]

    def factor_set(self, L: int | None = None) -> FactorSet:
        L = self.horizon if L is None else L
        return _factor_set(self.name, L)


@lru_cache(maxsize=None)
def _factor_set(name: str, L: int) -> FactorSet:
    fx = load(name)
    if fx.kind == "morphism":
        m, seed = fx.morphism()
        return fixed_point_factors(m, seed, L)
    if fx.kind == "transducer":
        base = load(fx.data["base"]).factor_set(L)
        return doubling_image(fx.transducer(), base)
    if fx.kind == "involution":
        return natural_coding(fx.involution(), L)
    raise ValueError(f"fixture {name!r} does not describe a factor set")


@lru_cache(maxsize=None)
def load(name: str) -> Fixture:
    try:
        text = resources.files("specular.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_ORDER)}") from None
    data = json.loads(text)
    return Fixture(data["name"], data["kind"], data.get("description", ""), data)


def names() -> tuple[str, ...]:
    return FIXTURE_ORDER
