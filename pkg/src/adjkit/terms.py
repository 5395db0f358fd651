"""Typed cell terms over a declared generator context, with a bounded rewriter.

Cells are generators, identities, formal inverses of invertible cells, and
composites along a chosen boundary level: composing level-m cells along
level m-1 covers both pasting of morphisms and vertical composition of
2-cells; composing along level m-2 is horizontal composition (whiskering
when some factors are identities). Composites are kept left-associated and
identities absorbed, so equality after normalization is tuple comparison.

The rewriter works on "atom" sequences: every 2-cell in scope is a vertical
composite of single generator cells whiskered by identity words. Interchange
moves commute independent atoms, and cancellation removes inverse pairs and
the triangle-identity pairs contributed by adjunction records marked as
axioms. A normal form not reaching the target within fuel is reported as
NotReduced, never as a claim of inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import ParseError, TypingError

Cell = Union["Gen", "Id", "Inv", "Comp"]


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    base: Cell


@dataclass(frozen=True)
class Inv:
    base: Cell


@dataclass(frozen=True)
class Comp:
    parts: tuple[Cell, ...]
    axis: int  # boundary level composed along


@dataclass(frozen=True)
class GenDecl:
    name: str
    level: int
    src: Optional[Cell]  # None for objects
    tgt: Optional[Cell]
    invertible: bool = False


@dataclass
class ZigZagRule:
    """Triangle-identity cancellations contributed by one axiom adjunction."""

    left_word: tuple[str, ...]
    right_word: tuple[str, ...]
    unit: str
    counit: str


@dataclass
class FormalContext:
    """Declared objects and generator cells, plus registered axiom rules."""

    gens: dict[str, GenDecl] = field(default_factory=dict)
    rules: list[ZigZagRule] = field(default_factory=list)
    # declarations are append-only, so per-cell results never go stale
    _level_cache: dict[Cell, int] = field(default_factory=dict, repr=False)
    _typing_cache: dict[Cell, tuple] = field(default_factory=dict, repr=False)
    _word_cache: dict[Cell, tuple] = field(default_factory=dict, repr=False)

    def declare_object(self, name: str) -> Gen:
        return self._add(GenDecl(name, 0, None, None))

    def declare(self, name: str, src: Cell, tgt: Cell, invertible: bool = False) -> Gen:
        src_s, src_t = check_typing(src, self)
        tgt_s, tgt_t = check_typing(tgt, self)
        if level_of(src, self) != level_of(tgt, self):
            raise TypingError(f"{name}: source and target levels differ")
        if level_of(src, self) >= 1 and (
            not cells_equal(src_s, tgt_s, self) or not cells_equal(src_t, tgt_t, self)
        ):
            raise TypingError(f"{name}: source and target are not parallel")
        return self._add(GenDecl(name, level_of(src, self) + 1, src, tgt, invertible))

    def _add(self, decl: GenDecl) -> Gen:
        if decl.name in self.gens:
            raise TypingError(f"generator {decl.name!r} already declared")
        self.gens[decl.name] = decl
        return Gen(decl.name)

    def decl(self, name: str) -> GenDecl:
        if name not in self.gens:
            raise TypingError(f"unresolved generator {name!r}")
        return self.gens[name]

    def gen_words(self, name: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
        decl = self.decl(name)
        if decl.level == 0:
            raise TypingError(f"{name} is an object, not a cell")
        return word_of(decl.src, self), word_of(decl.tgt, self)

    def add_zigzag_rule(self, left: Cell, right: Cell, unit: Gen, counit: Gen) -> None:
        self.rules.append(
            ZigZagRule(word_of(left, self), word_of(right, self), unit.name, counit.name)
        )


def comp(*parts: Cell, ctx: FormalContext) -> Cell:
    """Compose equal-level cells along their immediate boundary (function order)."""
    flat = _flatten(parts, _common_level(parts, ctx) - 1)
    if len(flat) == 1:
        return flat[0]
    return Comp(flat, _common_level(parts, ctx) - 1)


def hcomp(*parts: Cell, ctx: FormalContext) -> Cell:
    """Horizontal composite of equal-level cells along the level-2 boundary."""
    m = _common_level(parts, ctx)
    if m < 2:
        raise TypingError("horizontal composition needs cells of level >= 2")
    flat = _flatten(parts, m - 2)
    nontrivial = [p for p in flat if not isinstance(p, Id)]
    if not nontrivial:
        return flat[0] if len(flat) == 1 else Comp(flat, m - 2)
    if len(flat) == 1:
        return flat[0]
    return Comp(flat, m - 2)


def _flatten(parts: tuple[Cell, ...], axis: int) -> tuple[Cell, ...]:
    out: list[Cell] = []
    for p in parts:
        if isinstance(p, Comp) and p.axis == axis:
            out.extend(p.parts)
        else:
            out.append(p)
    return tuple(out)


def _common_level(parts: tuple[Cell, ...], ctx: FormalContext) -> int:
    levels = {level_of(p, ctx) for p in parts}
    if len(levels) != 1:
        raise TypingError(f"mixed levels in composite: {sorted(levels)}")
    return levels.pop()


def inverse(cell: Cell, ctx: FormalContext) -> Cell:
    """Formal inverse; defined for declared isos, identities, and their composites."""
    if isinstance(cell, Id):
        return cell
    if isinstance(cell, Inv):
        return cell.base
    if isinstance(cell, Gen):
        if not ctx.decl(cell.name).invertible:
            raise TypingError(f"{cell.name} is not declared invertible")
        return Inv(cell)
    if isinstance(cell, Comp):
        return Comp(tuple(inverse(p, ctx) for p in reversed(cell.parts)), cell.axis)
    raise TypingError(f"cannot invert {cell!r}")


def level_of(cell: Cell, ctx: FormalContext) -> int:
    if cell in ctx._level_cache:
        return ctx._level_cache[cell]
    result = _level_of(cell, ctx)
    ctx._level_cache[cell] = result
    return result


def _level_of(cell: Cell, ctx: FormalContext) -> int:
    if isinstance(cell, Gen):
        return ctx.decl(cell.name).level
    if isinstance(cell, Id):
        return level_of(cell.base, ctx) + 1
    if isinstance(cell, Inv):
        return level_of(cell.base, ctx)
    if isinstance(cell, Comp):
        return _common_level(cell.parts, ctx)
    raise TypingError(f"not a cell: {cell!r}")


def check_typing(cell: Cell, ctx: FormalContext) -> tuple[Optional[Cell], Optional[Cell]]:
    """Boundary of a cell; raises TypingError on incomposable composites."""
    if cell in ctx._typing_cache:
        return ctx._typing_cache[cell]
    result = _check_typing(cell, ctx)
    ctx._typing_cache[cell] = result
    return result


def _check_typing(cell: Cell, ctx: FormalContext) -> tuple[Optional[Cell], Optional[Cell]]:
    if isinstance(cell, Gen):
        decl = ctx.decl(cell.name)
        return decl.src, decl.tgt
    if isinstance(cell, Id):
        check_typing(cell.base, ctx)
        return cell.base, cell.base
    if isinstance(cell, Inv):
        src, tgt = check_typing(cell.base, ctx)
        inverse(cell.base, ctx)  # validates invertibility
        return tgt, src
    if isinstance(cell, Comp):
        m = _common_level(cell.parts, ctx)
        if not 0 <= cell.axis < m:
            raise TypingError(f"bad composition axis {cell.axis} for level {m}")
        bounds = [check_typing(p, ctx) for p in cell.parts]
        if cell.axis == m - 1:
            for (x, y), (s, t) in zip(zip(cell.parts, cell.parts[1:]), zip(bounds, bounds[1:])):
                if not cells_equal(s[0], t[1], ctx):
                    raise TypingError(
                        f"boundary mismatch composing {format_cell(x)} after {format_cell(y)}"
                    )
            return bounds[-1][0], bounds[0][1]
        if cell.axis == m - 2:
            src = Comp(tuple(b[0] for b in bounds), cell.axis)
            tgt = Comp(tuple(b[1] for b in bounds), cell.axis)
            check_typing(src, ctx)
            check_typing(tgt, ctx)
            return src, tgt
        raise TypingError("composition more than two levels down is out of scope")
    raise TypingError(f"not a cell: {cell!r}")


def word_of(cell: Optional[Cell], ctx: FormalContext) -> tuple[str, ...]:
    """Flatten a cell to its generator word along the immediate boundary."""
    if cell is None:
        raise TypingError("objects have no word form")
    if cell in ctx._word_cache:
        return ctx._word_cache[cell]
    result = _word_of(cell, ctx)
    ctx._word_cache[cell] = result
    return result


def _word_of(cell: Cell, ctx: FormalContext) -> tuple[str, ...]:
    if isinstance(cell, Gen):
        if ctx.decl(cell.name).level == 0:
            return (cell.name,)
        return (cell.name,)
    if isinstance(cell, Id):
        return ()
    if isinstance(cell, Comp):
        if cell.axis != level_of(cell, ctx) - 1:
            raise TypingError("horizontal composites have no word form")
        out: tuple[str, ...] = ()
        for p in cell.parts:
            out += word_of(p, ctx)
        return out
    raise TypingError(f"no word form for {format_cell(cell)}")


def cells_equal(x: Optional[Cell], y: Optional[Cell], ctx: FormalContext) -> bool:
    """Equality after identity absorption and flattening (boundaries only)."""
    if x is None or y is None:
        return x is y
    if level_of(x, ctx) != level_of(y, ctx):
        return False
    if level_of(x, ctx) == 0:
        return isinstance(x, Gen) and isinstance(y, Gen) and x.name == y.name
    try:
        if word_of(x, ctx) != word_of(y, ctx):
            return False
    except TypingError:
        return x == y
    sx, _ = check_typing(x, ctx)
    sy, _ = check_typing(y, ctx)
    if word_of(x, ctx) == ():
        return cells_equal(sx, sy, ctx)
    return True


# ---------------------------------------------------------------------------
# atom calculus


@dataclass(frozen=True)
class Atom:
    """One generator 2-cell whiskered by identity words: offset into the word."""

    offset: int
    gen: str
    inv: bool


@dataclass
class NormalForm:
    source: tuple[str, ...]
    atoms: tuple[Atom, ...]
    reduced: bool  # False when fuel ran out
    steps: int


def _atom_words(atom: Atom, ctx: FormalContext) -> tuple[tuple[str, ...], tuple[str, ...]]:
    src, tgt = ctx.gen_words(atom.gen)
    return (tgt, src) if atom.inv else (src, tgt)


def atomize(cell: Cell, ctx: FormalContext) -> tuple[tuple[str, ...], list[Atom]]:
    """Sequential form of a 2-cell: source word plus ordered atoms."""
    if isinstance(cell, Gen):
        src, _ = ctx.gen_words(cell.name)
        return src, [Atom(0, cell.name, False)]
    if isinstance(cell, Inv):
        if isinstance(cell.base, Gen):
            _, tgt = ctx.gen_words(cell.base.name)
            return tgt, [Atom(0, cell.base.name, True)]
        return atomize(inverse(cell.base, ctx), ctx)
    if isinstance(cell, Id):
        return word_of(cell.base, ctx), []
    if isinstance(cell, Comp):
        m = level_of(cell, ctx)
        if cell.axis == m - 1:  # vertical: apply rightmost factor first
            src_word: Optional[tuple[str, ...]] = None
            atoms: list[Atom] = []
            for part in reversed(cell.parts):
                part_src, part_atoms = atomize(part, ctx)
                if src_word is None:
                    src_word = part_src
                atoms.extend(part_atoms)
            assert src_word is not None
            return src_word, atoms
        if cell.axis == m - 2:  # horizontal: factors act on disjoint segments
            srcs = []
            all_atoms: list[list[Atom]] = []
            for part in cell.parts:
                part_src, part_atoms = atomize(part, ctx)
                srcs.append(part_src)
                all_atoms.append(part_atoms)
            atoms = []
            for i in range(len(cell.parts) - 1, -1, -1):
                shift = sum(len(s) for s in srcs[:i])
                atoms.extend(Atom(a.offset + shift, a.gen, a.inv) for a in all_atoms[i])
            return tuple(x for s in srcs for x in s), atoms
    raise TypingError(f"cannot atomize {format_cell(cell)}")


def _independent(a: Atom, b: Atom, ctx: FormalContext) -> bool:
    """b (applied after a) acts on a segment disjoint from a's output segment."""
    a_src, a_tgt = _atom_words(a, ctx)
    b_src, _ = _atom_words(b, ctx)
    return b.offset + len(b_src) <= a.offset or b.offset >= a.offset + len(a_tgt)


def _swap(a: Atom, b: Atom, ctx: FormalContext) -> tuple[Atom, Atom]:
    """Interchange two adjacent independent atoms (a first becomes b first)."""
    a_src, a_tgt = _atom_words(a, ctx)
    b_src, b_tgt = _atom_words(b, ctx)
    if b.offset + len(b_src) <= a.offset:  # b acts left of a
        return Atom(b.offset, b.gen, b.inv), Atom(
            a.offset + len(b_tgt) - len(b_src), a.gen, a.inv
        )
    return Atom(b.offset - (len(a_tgt) - len(a_src)), b.gen, b.inv), Atom(
        a.offset, a.gen, a.inv
    )


def _cancels(a: Atom, b: Atom, ctx: FormalContext) -> bool:
    """Adjacent pair (a then b) that composes to an identity."""
    if a.gen == b.gen and a.inv != b.inv and a.offset == b.offset:
        return True
    if a.inv or b.inv:
        return False
    for rule in ctx.rules:
        if a.gen == rule.unit and b.gen == rule.counit:
            if a.offset == b.offset + len(rule.left_word):  # zig
                return True
            if b.offset == a.offset + len(rule.right_word):  # zag
                return True
    return False


def normalize_atoms(
    source: tuple[str, ...], atoms: list[Atom], ctx: FormalContext, fuel: int = 10_000
) -> NormalForm:
    """Canonical interchange order plus cancellation, within a step budget."""
    work = list(atoms)
    steps = 0

    def sort_pass() -> bool:
        nonlocal steps
        moved = False
        changed = True
        while changed and steps < fuel:
            changed = False
            for i in range(len(work) - 1):
                a, b = work[i], work[i + 1]
                b_src, _ = _atom_words(b, ctx)
                if b.offset + len(b_src) <= a.offset and b.offset < a.offset:
                    work[i], work[i + 1] = _swap(a, b, ctx)
                    steps += 1
                    changed = moved = True
        return moved

    def bubble_out(probe: list[Atom], m: int, lo: int, hi: int) -> Optional[int]:
        """Expel probe[m] just past lo (leftward) or hi (rightward) via
        independent swaps; returns the new strait end it frees, or None."""
        nonlocal steps
        for target, step in ((lo, -1), (hi, 1)):
            scratch = list(probe)
            j = m
            ok = True
            while j != target:
                lhs, rhs = (j + step, j) if step == -1 else (j, j + step)
                if not _independent(scratch[lhs], scratch[rhs], ctx):
                    ok = False
                    break
                scratch[lhs], scratch[rhs] = _swap(scratch[lhs], scratch[rhs], ctx)
                j += step
                steps += 1
            if ok:
                probe[:] = scratch
                return step
        return None

    def cancel_pass() -> bool:
        # For each pair (i, k): expel every atom strictly between them past
        # one end of the interval, then test the now-adjacent pair. Probe
        # copies are committed only when the pair actually cancels.
        nonlocal steps
        for i in range(len(work)):
            for k in range(i + 1, len(work)):
                probe = list(work)
                pi, pk = i, k
                while pk > pi + 1 and steps < fuel:
                    for m in range(pi + 1, pk):
                        moved = bubble_out(probe, m, pi, pk)
                        if moved == -1:
                            pi += 1
                            break
                        if moved == 1:
                            pk -= 1
                            break
                    else:
                        break
                if pk != pi + 1:
                    continue
                if _cancels(probe[pi], probe[pk], ctx):
                    del probe[pi : pk + 1]
                    work[:] = probe
                    steps += 1
                    return True
        return False

    while steps < fuel:
        sort_pass()
        if not cancel_pass():
            break
    sort_pass()
    return NormalForm(source, tuple(work), steps < fuel, steps)


def normalize_cell(cell: Cell, ctx: FormalContext, fuel: int = 10_000) -> NormalForm:
    check_typing(cell, ctx)
    source, atoms = atomize(cell, ctx)
    return normalize_atoms(source, atoms, ctx, fuel)


def check_equal(c1: Cell, c2: Cell, ctx: FormalContext, fuel: int = 10_000) -> tuple[str, NormalForm, NormalForm]:
    """Compare normal forms: Verified on equality, NotReduced otherwise."""
    n1 = normalize_cell(c1, ctx, fuel)
    n2 = normalize_cell(c2, ctx, fuel)
    if n1.source == n2.source and n1.atoms == n2.atoms and n1.reduced and n2.reduced:
        return "Verified", n1, n2
    return "NotReduced", n1, n2


# ---------------------------------------------------------------------------
# textual term syntax: parenthesized prefix, e.g. "(comp g f)", "(hcomp (id g) u)"


def format_cell(cell: Cell) -> str:
    if isinstance(cell, Gen):
        return cell.name
    if isinstance(cell, Id):
        return f"(id {format_cell(cell.base)})"
    if isinstance(cell, Inv):
        return f"(inv {format_cell(cell.base)})"
    if isinstance(cell, Comp):
        inner = " ".join(format_cell(p) for p in cell.parts)
        return f"(comp:{cell.axis} {inner})"
    raise TypingError(f"not a cell: {cell!r}")


def parse_cell(text: str, ctx: FormalContext) -> Cell:
    """Parse the prefix syntax; 'comp' and 'hcomp' infer the axis from levels."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    cell, rest = _parse_tokens(tokens, ctx)
    if rest:
        raise ParseError(f"trailing tokens: {rest}")
    return cell


def _parse_tokens(tokens: list[str], ctx: FormalContext) -> tuple[Cell, list[str]]:
    if not tokens:
        raise ParseError("unexpected end of term")
    tok, rest = tokens[0], tokens[1:]
    if tok != "(":
        if tok == ")":
            raise ParseError("unexpected ')'")
        return Gen(tok), rest
    if not rest:
        raise ParseError("unexpected end of term")
    head, rest = rest[0], rest[1:]
    parts: list[Cell] = []
    while rest and rest[0] != ")":
        part, rest = _parse_tokens(rest, ctx)
        parts.append(part)
    if not rest:
        raise ParseError("missing ')'")
    rest = rest[1:]
    if head == "id":
        if len(parts) != 1:
            raise ParseError("id takes one argument")
        return Id(parts[0]), rest
    if head == "inv":
        if len(parts) != 1:
            raise ParseError("inv takes one argument")
        return Inv(parts[0]), rest
    if head == "comp":
        return comp(*parts, ctx=ctx), rest
    if head == "hcomp":
        return hcomp(*parts, ctx=ctx), rest
    if head.startswith("comp:"):
        return Comp(tuple(parts), int(head.split(":", 1)[1])), rest
    raise ParseError(f"unknown term head {head!r}")
