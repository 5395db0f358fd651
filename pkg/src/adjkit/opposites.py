"""Opposite functions on morphism levels 1..N.

An opposite function picks, per level, whether that level's morphisms are
reversed (op) or kept (id). Serialized as a string over {i, o}, index 1
leftmost, mirroring the dexterity-function format.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dexterity import DexterityFunction
from .errors import DomainError, ParseError

_DELTA = {0: "id", 1: "op"}  # delta: 0 -> id, 1 -> op


@dataclass(frozen=True)
class OppositeFunction:
    """An element of {id, op}^N indexed 1..N."""

    entries: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise DomainError("opposite function needs N >= 1")
        for e in self.entries:
            if e not in ("id", "op"):
                raise DomainError(f"invalid entry {e!r}")

    @classmethod
    def from_string(cls, text: str) -> "OppositeFunction":
        mapping = {"i": "id", "o": "op"}
        try:
            return cls(tuple(mapping[ch] for ch in text))
        except KeyError as exc:
            raise ParseError(f"invalid character {exc.args[0]!r} in opposite function") from exc

    @property
    def size(self) -> int:
        return len(self.entries)

    def at(self, j: int) -> str:
        if not 1 <= j <= self.size:
            raise DomainError(f"index {j} out of range 1..{self.size}")
        return self.entries[j - 1]

    def __str__(self) -> str:
        return "".join("i" if e == "id" else "o" for e in self.entries)

    def to_json(self) -> list[str]:
        return list(self.entries)


def op_for_pair(a: DexterityFunction, b: DexterityFunction, k: int, n_levels: int) -> OppositeFunction:
    """The opposite function attached to a pair of dexterity functions.

    Entry j+k, for j = 0..n, is op iff the L-counts of a and b restricted to
    1..j sum to something odd; all other entries are id. Symmetric in a and
    b, and constantly id when a = b.
    """
    if a.n != b.n:
        raise DomainError(f"length mismatch: {a.n} vs {b.n}")
    if k < 1:
        raise DomainError("k must be >= 1")
    if k + a.n > n_levels:
        raise DomainError(f"k + n = {k + a.n} exceeds N = {n_levels}")
    entries = ["id"] * n_levels
    count = 0
    for j in range(0, a.n + 1):
        if j > 0:
            count += (a.at(j) == "L") + (b.at(j) == "L")
        entries[j + k - 1] = _DELTA[count % 2]
    return OppositeFunction(tuple(entries))


def op_abbrev(a: DexterityFunction, n_levels: int) -> OppositeFunction:
    """Shorthand for the pairing with the constant-R function at k = 1."""
    from .dexterity import build

    return op_for_pair(a, build("constant_R", a.n), 1, n_levels)


def negate_opposite(o: OppositeFunction) -> OppositeFunction:
    """Pointwise swap id <-> op. Involutive."""
    return OppositeFunction(tuple("op" if e == "id" else "id" for e in o.entries))


def xor_compose(o1: OppositeFunction, o2: OppositeFunction) -> OppositeFunction:
    """Pointwise exclusive-or: op iff exactly one input entry is op."""
    if o1.size != o2.size:
        raise DomainError(f"length mismatch: {o1.size} vs {o2.size}")
    return OppositeFunction(
        tuple("op" if (x == "op") != (y == "op") else "id" for x, y in zip(o1.entries, o2.entries))
    )


def build_opposite(variant: str, n_levels: int) -> OppositeFunction:
    """even_op (op at even levels), odd_op (op at odd levels), constant_id, constant_op."""
    if n_levels < 1:
        raise DomainError("N must be >= 1")
    if variant == "even_op":
        return OppositeFunction(tuple("op" if j % 2 == 0 else "id" for j in range(1, n_levels + 1)))
    if variant == "odd_op":
        return OppositeFunction(tuple("op" if j % 2 == 1 else "id" for j in range(1, n_levels + 1)))
    if variant == "constant_id":
        return OppositeFunction(("id",) * n_levels)
    if variant == "constant_op":
        return OppositeFunction(("op",) * n_levels)
    raise DomainError(f"unknown variant {variant!r}")
