"""Towers of adjunction data indexed by dexterity functions or trees.

A tower over a base k-morphism f records one adjunction per tree node: the
root adjoins f on the side given by the root label, and each deeper record
adjoins a unit or counit produced one level up. The one-sided variant takes
exactly the side each label dictates (2^n - 1 records for depth n); the
full variant takes both sides everywhere ((2/3)(4^n - 1) records).

Record surgery at an internal node flips that record (the flipped unit and
counit are the adjoints that the child records already provide), swaps the
child branches with reversed sides, and leaves every deeper record intact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .adjunctions import AXIOM, AdjunctionRecord, check_record_typing, register_axiom
from .dexterity import DexterityFunction
from .errors import CapacityError, DomainError
from .terms import Cell, FormalContext, Gen, Id, comp, format_cell
from .trees import Tree, TreePath, depth, format_tree, tree_from_function, tree_interchange


@dataclass(frozen=True)
class TowerNode:
    morphism: str
    side: str  # "L" or "R"
    record: AdjunctionRecord


@dataclass
class SchemaTower:
    base: str
    level: int
    variant: str  # "one_sided" or "full"
    tree: Tree
    ctx: FormalContext
    nodes: dict[str, TowerNode]

    def record_names(self) -> list[str]:
        return sorted(self.nodes)


def schema_counts(n: int, variant: str, offset: Optional[int] = None) -> int:
    """Closed-form record counts: per level when offset is given, else total."""
    if variant not in ("one_sided", "full"):
        raise DomainError(f"unknown schema variant {variant!r}")
    if offset is not None:
        if not 0 <= offset <= n - 1:
            raise DomainError(f"level offset {offset} out of range for depth {n}")
        return 2**offset if variant == "one_sided" else 2 ** (2 * offset + 1)
    return 2**n - 1 if variant == "one_sided" else (2 * (4**n - 1)) // 3


def _base_context(base: str, k: int) -> tuple[FormalContext, Gen, Cell, Cell]:
    """Generic ambient for a k-morphism: a parallel pair at each lower level."""
    ctx = FormalContext()
    src: Cell = ctx.declare_object("x0")
    tgt: Cell = ctx.declare_object("x1")
    for i in range(1, k):
        new_src = ctx.declare(f"s{i}", src, tgt)
        new_tgt = ctx.declare(f"t{i}", src, tgt)
        src, tgt = new_src, new_tgt
    f = ctx.declare(base, src, tgt)
    return ctx, f, src, tgt


def _declare_record(
    ctx: FormalContext,
    cell: Gen,
    src: Cell,
    tgt: Cell,
    side: str,
    unit_name: str,
    counit_name: str,
) -> AdjunctionRecord:
    partner = ctx.declare(f"{cell.name}^{side}", tgt, src)
    if side == "R":
        left, right = cell, partner
        u_src, c_tgt = src, tgt
    else:
        left, right = partner, cell
        u_src, c_tgt = tgt, src
    unit = ctx.declare(unit_name, Id(u_src), comp(right, left, ctx=ctx))
    counit = ctx.declare(counit_name, comp(left, right, ctx=ctx), Id(c_tgt))
    record = AdjunctionRecord(left, right, unit, counit, status=AXIOM)
    check_record_typing(record, ctx)
    register_axiom(ctx, record)
    return record


def generate_schema(
    base: str,
    level: int,
    dexterity: Union[DexterityFunction, Tree],
    variant: str = "one_sided",
    max_level: Optional[int] = None,
) -> SchemaTower:
    """Adjunction records for every node of the dexterity tree over `base`."""
    if variant not in ("one_sided", "full"):
        raise DomainError(f"unknown schema variant {variant!r}")
    tree = (
        tree_from_function(dexterity)
        if isinstance(dexterity, DexterityFunction)
        else dexterity
    )
    n = depth(tree)
    if max_level is not None and level + n > max_level:
        raise CapacityError(
            f"tower reaches level {level + n} but the context stops at {max_level}"
        )
    ctx, f, src, tgt = _base_context(base, level)
    nodes: dict[str, TowerNode] = {}

    if variant == "one_sided":

        def visit(cell: Gen, src: Cell, tgt: Cell, subtree: Tree, path: str) -> None:
            side = subtree[0]
            suffix = f"_{path}" if path else ""
            record = _declare_record(ctx, cell, src, tgt, side, f"u{suffix}", f"c{suffix}")
            nodes[path] = TowerNode(cell.name, side, record)
            if len(subtree) == 3:
                u, c = record.unit, record.counit
                assert isinstance(u, Gen) and isinstance(c, Gen)
                u_src, u_tgt = ctx.decl(u.name).src, ctx.decl(u.name).tgt
                c_src, c_tgt = ctx.decl(c.name).src, ctx.decl(c.name).tgt
                visit(u, u_src, u_tgt, subtree[1], path + "u")
                visit(c, c_src, c_tgt, subtree[2], path + "c")

        visit(f, src, tgt, tree, "")
    else:

        def visit_full(cell: Gen, src: Cell, tgt: Cell, subtree: Tree, path: str) -> None:
            for side in ("L", "R"):
                key = f"{path}|{side}" if path else f"|{side}"
                u_name = f"{cell.name}.u{side}"
                c_name = f"{cell.name}.c{side}"
                record = _declare_record(ctx, cell, src, tgt, side, u_name, c_name)
                nodes[key] = TowerNode(cell.name, side, record)
                if len(subtree) == 3:
                    u, c = record.unit, record.counit
                    assert isinstance(u, Gen) and isinstance(c, Gen)
                    visit_full(
                        u, ctx.decl(u.name).src, ctx.decl(u.name).tgt,
                        subtree[1], f"{path}u{side}",
                    )
                    visit_full(
                        c, ctx.decl(c.name).src, ctx.decl(c.name).tgt,
                        subtree[2], f"{path}c{side}",
                    )

        visit_full(f, src, tgt, tree, "")

    return SchemaTower(base, level, variant, tree, ctx, nodes)


def interchange_schema(
    tower: SchemaTower, node: Union[TreePath, int]
) -> SchemaTower:
    """Flip the addressed record(s) and swap their child branches.

    The flipped record keeps the same adjoint pair with left and right
    exchanged; its unit is the adjoint of the old counit and its counit the
    adjoint of the old unit, both already present in the child records.
    Child records keep their cells, move to the opposite branch, and flip
    their side tag; everything below them is untouched.
    """
    if tower.variant != "one_sided":
        raise DomainError("record surgery is defined for one-sided towers")
    if isinstance(node, int):
        offset = node - tower.level
        if not 0 <= offset < depth(tower.tree) - 1:
            raise DomainError(f"no internal nodes at level {node}")
        paths = [p for p in tower.nodes if len(p) == offset]
        out = tower
        for p in paths:
            out = interchange_schema(out, tuple("unit" if ch == "u" else "counit" for ch in p))
        return out

    path_str = "".join("u" if step == "unit" else "c" for step in node)
    if path_str not in tower.nodes:
        raise DomainError(f"no record at node {path_str!r}")
    if path_str + "u" not in tower.nodes:
        raise DomainError("cannot flip a leaf record: no child data to supply adjoints")
    child_u = tower.nodes[path_str + "u"]
    child_c = tower.nodes[path_str + "c"]
    if child_u.side != child_c.side:
        raise DomainError("child records take different sides; surgery inapplicable")

    new_tree = tree_interchange(tower.tree, node)
    old = tower.nodes[path_str]

    def partner(tn: TowerNode) -> Gen:
        cell = tn.record.right if tn.side == "R" else tn.record.left
        assert isinstance(cell, Gen)
        return cell

    flipped = AdjunctionRecord(
        left=old.record.right,
        right=old.record.left,
        unit=Gen(partner(child_c).name),
        counit=Gen(partner(child_u).name),
        status=AXIOM,
    )
    check_record_typing(flipped, tower.ctx)
    register_axiom(tower.ctx, flipped)

    nodes = dict(tower.nodes)
    nodes[path_str] = TowerNode(old.morphism, "L" if old.side == "R" else "R", flipped)
    # swap the two child subtrees wholesale, flipping only the child roots
    moved: dict[str, TowerNode] = {}
    for key, tn in tower.nodes.items():
        if key.startswith(path_str + "u") or key.startswith(path_str + "c"):
            branch = key[len(path_str)]
            rest = key[len(path_str) + 1 :]
            new_key = path_str + ("c" if branch == "u" else "u") + rest
            if not rest:  # child root: new base morphism is the old partner
                tn = TowerNode(
                    partner(tn).name, "L" if tn.side == "R" else "R", tn.record
                )
            moved[new_key] = tn
            del nodes[key]
    nodes.update(moved)
    return SchemaTower(tower.base, tower.level, tower.variant, new_tree, tower.ctx, nodes)


def tower_to_json(tower: SchemaTower) -> dict:
    return {
        "base": tower.base,
        "level": tower.level,
        "variant": tower.variant,
        "dexterity_tree": format_tree(tower.tree),
        "records": [
            {
                "name": key,
                "morphism": tn.morphism,
                "side": tn.side,
                "left": format_cell(tn.record.left),
                "right": format_cell(tn.record.right),
                "unit": format_cell(tn.record.unit),
                "counit": format_cell(tn.record.counit),
                "status": tn.record.status,
            }
            for key, tn in sorted(tower.nodes.items())
        ],
    }
