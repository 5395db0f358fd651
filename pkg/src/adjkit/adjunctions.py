"""Formal adjunction records and operations that build new ones.

A record asserts left -| right together with unit and counit cells and a
witness status: Axiom records contribute triangle-identity cancellation
rules to the ambient context, Verified records passed the bounded zig-zag
check, Unverified records were constructed but not yet checked, and
NotReduced marks a check that ran out of fuel (no claim either way).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .errors import TypingError
from .terms import (
    Cell,
    FormalContext,
    Gen,
    Id,
    NormalForm,
    check_equal,
    check_typing,
    comp,
    hcomp,
    inverse,
    level_of,
)

AXIOM = "Axiom"
VERIFIED = "Verified"
UNVERIFIED = "Unverified"
NOT_REDUCED = "NotReduced"


@dataclass(frozen=True)
class AdjunctionRecord:
    left: Cell
    right: Cell
    unit: Cell
    counit: Cell
    status: str = UNVERIFIED
    dual_tags: tuple[str, ...] = ()


@dataclass(frozen=True)
class ZigZagReport:
    status: str
    zig: tuple[NormalForm, NormalForm]
    zag: tuple[NormalForm, NormalForm]


def declare_adjunction(
    ctx: FormalContext,
    left_name: str,
    right_name: str,
    source: Cell,
    target: Cell,
    unit_name: Optional[str] = None,
    counit_name: Optional[str] = None,
) -> AdjunctionRecord:
    """Declare a fresh axiom adjunction between two existing objects."""
    left = ctx.declare(left_name, source, target)
    right = ctx.declare(right_name, target, source)
    unit_name = unit_name or f"u_{left_name}"
    counit_name = counit_name or f"c_{left_name}"
    unit = ctx.declare(unit_name, Id(source), comp(right, left, ctx=ctx))
    counit = ctx.declare(counit_name, comp(left, right, ctx=ctx), Id(target))
    record = AdjunctionRecord(left, right, unit, counit, status=AXIOM)
    register_axiom(ctx, record)
    return record


def register_axiom(ctx: FormalContext, record: AdjunctionRecord) -> None:
    if record.status != AXIOM:
        raise TypingError("only Axiom records contribute rewrite rules")
    if not isinstance(record.unit, Gen) or not isinstance(record.counit, Gen):
        raise TypingError("axiom unit and counit must be generator cells")
    ctx.add_zigzag_rule(record.left, record.right, record.unit, record.counit)


def check_record_typing(record: AdjunctionRecord, ctx: FormalContext) -> None:
    """Boundary checks: unit id => r.l and counit l.r => id, same objects."""
    from .terms import cells_equal

    src_l, tgt_l = check_typing(record.left, ctx)
    src_r, tgt_r = check_typing(record.right, ctx)
    if level_of(record.left, ctx) != level_of(record.right, ctx):
        raise TypingError("left and right adjoints live at different levels")
    if not cells_equal(src_l, tgt_r, ctx) or not cells_equal(tgt_l, src_r, ctx):
        raise TypingError("left and right adjoints are not opposed")
    u_src, u_tgt = check_typing(record.unit, ctx)
    c_src, c_tgt = check_typing(record.counit, ctx)
    rl = comp(record.right, record.left, ctx=ctx)
    lr = comp(record.left, record.right, ctx=ctx)
    if not cells_equal(u_src, Id(src_l), ctx) or not cells_equal(u_tgt, rl, ctx):
        raise TypingError("unit boundary is not id => right.left")
    if not cells_equal(c_src, lr, ctx) or not cells_equal(c_tgt, Id(tgt_l), ctx):
        raise TypingError("counit boundary is not left.right => id")


def zig_cell(record: AdjunctionRecord, ctx: FormalContext) -> Cell:
    """(counit x id_l) . (id_l x unit) : l => l."""
    return comp(
        hcomp(record.counit, Id(record.left), ctx=ctx),
        hcomp(Id(record.left), record.unit, ctx=ctx),
        ctx=ctx,
    )


def zag_cell(record: AdjunctionRecord, ctx: FormalContext) -> Cell:
    """(id_r x counit) . (unit x id_r) : r => r."""
    return comp(
        hcomp(Id(record.right), record.counit, ctx=ctx),
        hcomp(record.unit, Id(record.right), ctx=ctx),
        ctx=ctx,
    )


def verify_zigzag(
    record: AdjunctionRecord, ctx: FormalContext, fuel: int = 10_000
) -> tuple[AdjunctionRecord, ZigZagReport]:
    """Reduce both triangle composites; Verified only if both reach identity.

    Boundary violations are reported as a TypeError status, not raised."""
    try:
        check_record_typing(record, ctx)
        zig = zig_cell(record, ctx)
        zag = zag_cell(record, ctx)
        check_typing(zig, ctx)
        check_typing(zag, ctx)
    except TypingError:
        empty = NormalForm((), (), True, 0)
        return record, ZigZagReport("TypeError", (empty, empty), (empty, empty))
    zig_status, zn1, zn2 = check_equal(zig, Id(record.left), ctx, fuel)
    zag_status, gn1, gn2 = check_equal(zag, Id(record.right), ctx, fuel)
    status = VERIFIED if zig_status == VERIFIED and zag_status == VERIFIED else NOT_REDUCED
    report = ZigZagReport(status, (zn1, zn2), (gn1, gn2))
    if record.status == AXIOM:
        return record, report  # axioms keep their status; the check is informative
    return replace(record, status=status), report


def compose_adjunctions(
    first: AdjunctionRecord, second: AdjunctionRecord, ctx: FormalContext
) -> AdjunctionRecord:
    """Paste records whose right adjoints compose: f = first.right applied
    before g = second.right, yielding f^L.g^L -| g.f with unit
    (id_g x u_f x id_g^L) . u_g and counit c_f . (id_f^L x c_g x id_f)."""
    left = comp(first.left, second.left, ctx=ctx)
    right = comp(second.right, first.right, ctx=ctx)
    unit = comp(
        hcomp(Id(second.right), first.unit, Id(second.left), ctx=ctx),
        second.unit,
        ctx=ctx,
    )
    counit = comp(
        first.counit,
        hcomp(Id(first.left), second.counit, Id(first.right), ctx=ctx),
        ctx=ctx,
    )
    record = AdjunctionRecord(left, right, unit, counit, status=UNVERIFIED)
    check_record_typing(record, ctx)
    return record


def transport(
    record: AdjunctionRecord, mu: Cell, nu: Cell, ctx: FormalContext
) -> AdjunctionRecord:
    """Move an adjunction across isos mu: l => l' and nu: r => r'."""
    from .terms import cells_equal

    mu_src, mu_tgt = check_typing(mu, ctx)
    nu_src, nu_tgt = check_typing(nu, ctx)
    if not cells_equal(mu_src, record.left, ctx):
        raise TypingError("mu does not start at the record's left adjoint")
    if not cells_equal(nu_src, record.right, ctx):
        raise TypingError("nu does not start at the record's right adjoint")
    unit = comp(hcomp(nu, mu, ctx=ctx), record.unit, ctx=ctx)
    counit = comp(record.counit, hcomp(inverse(mu, ctx), inverse(nu, ctx), ctx=ctx), ctx=ctx)
    return AdjunctionRecord(mu_tgt, nu_tgt, unit, counit, status=UNVERIFIED)


def dualize(record: AdjunctionRecord, variant: str) -> AdjunctionRecord:
    """Structural duals: op and co swap the adjoint pair, co and coop swap
    unit with counit. Applying the same variant twice restores the record."""
    if variant == "op":
        out = replace(record, left=record.right, right=record.left)
    elif variant == "co":
        out = replace(
            record,
            left=record.right,
            right=record.left,
            unit=record.counit,
            counit=record.unit,
        )
    elif variant == "coop":
        out = replace(record, unit=record.counit, counit=record.unit)
    else:
        raise TypingError(f"unknown dual variant {variant!r}")
    tags = list(record.dual_tags)
    if tags and tags[-1] == variant:
        tags.pop()
    else:
        tags.append(variant)
    return replace(out, dual_tags=tuple(tags))


@dataclass(frozen=True)
class ComparisonReport:
    cell: Cell
    unit_equation: str
    counit_equation: str


def comparison_cell(
    rec1: AdjunctionRecord, rec2: AdjunctionRecord, ctx: FormalContext, fuel: int = 10_000
) -> ComparisonReport:
    """Canonical cell r1 => r2 between two right adjoints of the same left
    adjoint, with bounded checks that it intertwines the two structures:
    (phi x id_l) . u1 against u2, and c2 . (id_l x phi) against c1."""
    from .terms import cells_equal

    if not cells_equal(rec1.left, rec2.left, ctx):
        raise TypingError("records do not share a left adjoint")
    phi = comp(
        hcomp(Id(rec2.right), rec1.counit, ctx=ctx),
        hcomp(rec2.unit, Id(rec1.right), ctx=ctx),
        ctx=ctx,
    )
    l = rec1.left
    eq1, _, _ = check_equal(
        comp(hcomp(phi, Id(l), ctx=ctx), rec1.unit, ctx=ctx), rec2.unit, ctx, fuel
    )
    eq2, _, _ = check_equal(
        comp(rec2.counit, hcomp(Id(l), phi, ctx=ctx), ctx=ctx), rec1.counit, ctx, fuel
    )
    return ComparisonReport(phi, eq1, eq2)
