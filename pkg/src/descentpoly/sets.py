"""Sets of positive integers, including symbolic infinite families.

Every statistic in this package depends on a set only through its
restriction to {1, ..., n}, so infinite sets (residue classes, half-lines)
are kept symbolic and restricted on demand.  All sets live inside the
positive integers; 0 is never a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "IntegerSet",
    "Explicit",
    "ResidueClasses",
    "HalfLine",
    "AllIntegers",
    "SetUnion",
    "explicit_set",
    "residue_set",
    "at_least",
    "parse_set",
    "ALL",
    "EMPTY",
    "EVENS",
    "ODDS",
    "alpha",
    "beta",
]


class IntegerSet:
    """Base class: a subset of the positive integers."""

    def contains(self, z: int) -> bool:
        raise NotImplementedError

    def __contains__(self, z: int) -> bool:
        return z >= 1 and self.contains(z)

    def restrict(self, n: int) -> tuple[int, ...]:
        """The sorted elements of this set that lie in {1, ..., n}."""
        return tuple(z for z in range(1, n + 1) if z in self)

    def complement_in(self, n: int) -> tuple[int, ...]:
        """The sorted elements of {1, ..., n} not in this set."""
        return tuple(z for z in range(1, n + 1) if z not in self)

    def __str__(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Explicit(IntegerSet):
    members: tuple[int, ...]

    def __post_init__(self):
        if any(z < 1 for z in self.members):
            raise ValueError("set members must be positive integers")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and distinct")

    def contains(self, z: int) -> bool:
        return z in self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(z) for z in self.members) + "}"


@dataclass(frozen=True)
class ResidueClasses(IntegerSet):
    """Positive z with z mod modulus in a fixed residue set.

    Residue 0 means z divisible by the modulus, so residue_set(2, (0,))
    is the positive even numbers.
    """

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if any(not 0 <= r < self.modulus for r in self.residues):
            raise ValueError("residues must lie in [0, modulus)")
        if list(self.residues) != sorted(set(self.residues)):
            raise ValueError("residues must be sorted and distinct")

    def contains(self, z: int) -> bool:
        return z % self.modulus in self.residues

    def __str__(self) -> str:
        return f"mod:{self.modulus}:" + ",".join(str(r) for r in self.residues)


@dataclass(frozen=True)
class HalfLine(IntegerSet):
    """The half-line {start, start + 1, start + 2, ...}."""

    start: int

    def __post_init__(self):
        if self.start < 1:
            raise ValueError("half-line start must be >= 1")

    def contains(self, z: int) -> bool:
        return z >= self.start

    def __str__(self) -> str:
        return f"geq:{self.start}"


@dataclass(frozen=True)
class AllIntegers(IntegerSet):
    def contains(self, z: int) -> bool:
        return True

    def __str__(self) -> str:
        return "all"


@dataclass(frozen=True)
class SetUnion(IntegerSet):
    parts: tuple[IntegerSet, ...]

    def contains(self, z: int) -> bool:
        return any(z in p for p in self.parts)

    def __str__(self) -> str:
        return "|".join(str(p) for p in self.parts)


def explicit_set(members: Iterable[int]) -> Explicit:
    return Explicit(tuple(sorted(set(members))))


def residue_set(modulus: int, residues: Iterable[int]) -> ResidueClasses:
    return ResidueClasses(modulus, tuple(sorted(set(residues))))


def at_least(start: int) -> HalfLine:
    return HalfLine(start)


ALL = AllIntegers()
EMPTY = explicit_set(())
EVENS = residue_set(2, (0,))
ODDS = residue_set(2, (1,))


def _parse_atom(text: str) -> IntegerSet:
    text = text.strip()
    if text == "all":
        return ALL
    if text.startswith("{") and text.endswith("}"):
        inner = text[1:-1].strip()
        if not inner:
            return EMPTY
        return explicit_set(int(tok) for tok in inner.split(","))
    if text.startswith("mod:"):
        _, k, rs = text.split(":")
        return residue_set(int(k), (int(tok) for tok in rs.split(",")))
    if text.startswith("geq:"):
        return at_least(int(text.split(":")[1]))
    raise ValueError(f"cannot parse set syntax: {text!r}")


def parse_set(text: str) -> IntegerSet:
    """Parse the CLI set syntax: `all`, `{2,3,5}`, `mod:k:r1,r2`, `geq:k`,
    and unions of these joined by `|`."""
    atoms = [_parse_atom(tok) for tok in text.split("|")]
    if len(atoms) == 1:
        return atoms[0]
    return SetUnion(tuple(atoms))


def alpha(s: IntegerSet, n: int, j: int) -> int:
    """Count of elements in (j, n] that are not in s."""
    if not 1 <= j <= n:
        raise ValueError("need 1 <= j <= n")
    return sum(1 for z in range(j + 1, n + 1) if z not in s)


def beta(s: IntegerSet, n: int, j: int) -> int:
    """Count of elements in [1, j) that are not in s."""
    if not 1 <= j <= n:
        raise ValueError("need 1 <= j <= n")
    return sum(1 for z in range(1, j) if z not in s)
