"""Sparse integer chains over hashable generators, and coefficient rings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable


@dataclass(frozen=True)
class Unit:
    """The generator 1 of the augmentation module Z."""

    def __repr__(self) -> str:
        return "1"


UNIT = Unit()


class Chain(dict):
    """Finite integer combination; zero coefficients are never stored."""

    @classmethod
    def of(cls, *gens: Hashable, coeff: int = 1) -> Chain:
        out = cls()
        for g in gens:
            out.add(g, coeff)
        return out

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Hashable, int]]) -> Chain:
        out = cls()
        for g, c in terms:
            out.add(g, c)
        return out

    def add(self, gen: Hashable, coeff: int = 1) -> None:
        if not coeff:
            return
        x = self.get(gen, 0) + coeff
        if x:
            self[gen] = x
        else:
            self.pop(gen, None)

    def iadd(self, other: dict, scale: int = 1) -> Chain:
        for g, c in other.items():
            self.add(g, scale * c)
        return self

    def __add__(self, other: dict) -> Chain:
        return Chain(self).iadd(other)

    def __sub__(self, other: dict) -> Chain:
        return Chain(self).iadd(other, -1)

    def __neg__(self) -> Chain:
        return Chain({g: -c for g, c in self.items()})

    def scaled(self, s: int) -> Chain:
        return Chain({g: s * c for g, c in self.items()}) if s else Chain()

    def apply(self, f: Callable[[Hashable], dict]) -> Chain:
        """Linear extension of a map from generators to chains."""
        out = Chain()
        for g, c in self.items():
            out.iadd(f(g), c)
        return out

    def __repr__(self) -> str:
        if not self:
            return "0"
        parts = []
        for g, c in sorted(self.items(), key=lambda gc: repr(gc[0])):
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{g!r}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s


@dataclass(frozen=True)
class Coefficients:
    """Z (modulus None) or Z/m."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("Z/m needs m >= 2")

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    @property
    def name(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"

    @classmethod
    def parse(cls, text: str) -> Coefficients:
        t = text.strip().replace(" ", "")
        if t == "Z":
            return cls()
        if t.startswith("Z/"):
            return cls(int(t[2:]))
        raise ValueError(f"coefficients must be Z or Z/m, got {text!r}")

    def to_json(self) -> dict:
        return {"type": "Z"} if self.modulus is None else {"type": "Zmod", "modulus": self.modulus}

    @classmethod
    def from_json(cls, doc: dict) -> Coefficients:
        if doc.get("type") == "Z":
            return cls()
        if doc.get("type") == "Zmod":
            return cls(int(doc["modulus"]))
        raise ValueError(f"unknown coefficients {doc!r}")


Z = Coefficients()
