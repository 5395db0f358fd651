"""Dexterity functions: parity classes and interchange rewriting with witnesses.

A dexterity function prescribes, level by level, which sided adjoint is
demanded of each unit/counit morphism in a tower of adjunctibility data.
Textually it is a string over {L, R}; index 1 is the leftmost character.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import DomainError, ParseError

Side = Literal["L", "R"]

SIDES: tuple[Side, Side] = ("L", "R")


def negate_side(s: Side) -> Side:
    """Switch direction: -L = R, -R = L. An involution."""
    if s == "L":
        return "R"
    if s == "R":
        return "L"
    raise DomainError(f"not a side: {s!r}")


@dataclass(frozen=True)
class DexterityFunction:
    """An element of {L,R}^n, indexed 1..n."""

    entries: tuple[Side, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise DomainError("dexterity function needs length n >= 1")
        for s in self.entries:
            if s not in ("L", "R"):
                raise DomainError(f"invalid entry {s!r}")

    @classmethod
    def from_string(cls, text: str) -> "DexterityFunction":
        if not text or set(text) - {"L", "R"}:
            raise ParseError(f"dexterity string must be nonempty over {{L,R}}: {text!r}")
        return cls(tuple(text))  # type: ignore[arg-type]

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, i: int) -> Side:
        """1-based lookup."""
        if not 1 <= i <= self.n:
            raise DomainError(f"index {i} out of range 1..{self.n}")
        return self.entries[i - 1]

    def __str__(self) -> str:
        return "".join(self.entries)

    def __iter__(self) -> Iterator[Side]:
        return iter(self.entries)


@dataclass(frozen=True)
class RewriteTrace:
    """Ordered interchange positions, each 1-based in 1..n-1."""

    positions: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.positions)


def build(variant: str, n: int, j: int | None = None) -> DexterityFunction:
    """Construct the named dexterity functions.

    variant is one of "constant_L", "constant_R", "even", "odd",
    "single_L_at" (which requires j). even^n is the constant R function;
    odd^n is R everywhere except L at index n.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if variant == "constant_L":
        return DexterityFunction(("L",) * n)
    if variant in ("constant_R", "even"):
        return DexterityFunction(("R",) * n)
    if variant == "odd":
        return DexterityFunction(("R",) * (n - 1) + ("L",))
    if variant == "single_L_at":
        if j is None or not 1 <= j <= n:
            raise DomainError(f"single_L_at index {j} out of range 1..{n}")
        return DexterityFunction(tuple("L" if i == j else "R" for i in range(1, n + 1)))  # type: ignore[arg-type]
    raise DomainError(f"unknown variant {variant!r}")


def l_count(a: DexterityFunction) -> int:
    return sum(1 for s in a.entries if s == "L")


def parity_pair(a: DexterityFunction, b: DexterityFunction) -> str:
    """"Parity" iff the L-counts agree mod 2; an equivalence with two classes."""
    if a.n != b.n:
        raise DomainError(f"length mismatch: {a.n} vs {b.n}")
    return "Parity" if (l_count(a) - l_count(b)) % 2 == 0 else "Nonparity"


def canonical(a: DexterityFunction) -> DexterityFunction:
    """The class representative: even^n for even L-count, odd^n otherwise."""
    return build("even" if l_count(a) % 2 == 0 else "odd", a.n)


def interchange(a: DexterityFunction, j: int) -> DexterityFunction:
    """Negate entries j and j+1. Involutive; preserves L-count parity."""
    if not 1 <= j <= a.n - 1:
        raise DomainError(f"interchange position {j} out of range 1..{a.n - 1}")
    entries = list(a.entries)
    entries[j - 1] = negate_side(entries[j - 1])
    entries[j] = negate_side(entries[j])
    return DexterityFunction(tuple(entries))


def normalize_witness(a: DexterityFunction, b: DexterityFunction) -> RewriteTrace:
    """Interchange positions turning a into b, by the ascending scan.

    For j = 1..n-1, emit j iff the current function disagrees with b at j.
    Requires a parity pair; a nonparity pair would end with a mismatch at n.
    """
    if parity_pair(a, b) != "Parity":
        raise DomainError("Nonparity pair admits no interchange witness")
    cur = a
    positions: list[int] = []
    for j in range(1, a.n):
        if cur.at(j) != b.at(j):
            cur = interchange(cur, j)
            positions.append(j)
    assert cur == b, "parity scan must close at position n"
    return RewriteTrace(tuple(positions))


def replay(a: DexterityFunction, trace: RewriteTrace | Iterable[int]) -> DexterityFunction:
    """Left fold of interchange over the trace."""
    positions = trace.positions if isinstance(trace, RewriteTrace) else tuple(trace)
    cur = a
    for j in positions:
        cur = interchange(cur, j)
    return cur


def all_functions(n: int) -> list[DexterityFunction]:
    """All 2^n dexterity functions of length n, lexicographic with L < R."""
    out = []
    for bits in range(2 ** n):
        entries = tuple("R" if (bits >> (n - 1 - i)) & 1 else "L" for i in range(n))
        out.append(DexterityFunction(entries))  # type: ignore[arg-type]
    return out
