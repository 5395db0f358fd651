import pytest

from adjkit.adjunctions import (
    AXIOM,
    NOT_REDUCED,
    UNVERIFIED,
    VERIFIED,
    AdjunctionRecord,
    comparison_cell,
    compose_adjunctions,
    declare_adjunction,
    dualize,
    transport,
    verify_zigzag,
)
from adjkit.errors import TypingError
from adjkit.terms import (
    FormalContext,
    Id,
    check_equal,
    inverse,
    normalize_cell,
    word_of,
)


@pytest.fixture
def chain():
    """Objects X, Y, Z with adjunctions fL -| f: X -> Y and gL -| g: Y -> Z."""
    ctx = FormalContext()
    X = ctx.declare_object("X")
    Y = ctx.declare_object("Y")
    Z = ctx.declare_object("Z")
    Af = declare_adjunction(ctx, "fL", "f", Y, X, "uf", "cf")
    Ag = declare_adjunction(ctx, "gL", "g", Z, Y, "ug", "cg")
    return ctx, X, Y, Z, Af, Ag


@pytest.fixture
def iso_ctx(chain):
    """Extends the chain with invertible 2-cells mu: fL => fL' and nu: f => f'."""
    ctx, X, Y, Z, Af, Ag = chain
    fLp = ctx.declare("fLp", Y, X)
    fp = ctx.declare("fp", X, Y)
    mu = ctx.declare("mu", Af.left, fLp, invertible=True)
    nu = ctx.declare("nu", Af.right, fp, invertible=True)
    return ctx, Af, Ag, mu, nu


class TestAxioms:
    def test_axiom_verifies(self, chain):
        ctx, *_, Af, Ag = chain
        rec, report = verify_zigzag(Af, ctx)
        assert report.status == VERIFIED
        assert rec.status == AXIOM  # axioms keep their status

    def test_unit_counit_boundaries(self, chain):
        ctx, X, Y, Z, Af, Ag = chain
        from adjkit.terms import check_typing

        src, tgt = check_typing(Af.unit, ctx)
        assert word_of(src, ctx) == ()
        assert word_of(tgt, ctx) == ("f", "fL")


class TestCompose:
    def test_composite_verifies(self, chain):
        ctx, *_, Af, Ag = chain
        comp_rec = compose_adjunctions(Af, Ag, ctx)
        assert comp_rec.status == UNVERIFIED
        rec, report = verify_zigzag(comp_rec, ctx)
        assert report.status == VERIFIED
        assert rec.status == VERIFIED

    def test_composite_adjoint_words(self, chain):
        ctx, *_, Af, Ag = chain
        comp_rec = compose_adjunctions(Af, Ag, ctx)
        assert word_of(comp_rec.left, ctx) == ("fL", "gL")
        assert word_of(comp_rec.right, ctx) == ("g", "f")

    def test_boundary_mismatch_rejected(self, chain):
        ctx, *_, Af, Ag = chain
        with pytest.raises(TypingError):
            compose_adjunctions(Ag, Af, ctx)

    def test_associative_up_to_normal_form(self, chain):
        ctx, X, Y, Z, Af, Ag = chain
        W = ctx.declare_object("W")
        Ah = declare_adjunction(ctx, "hL", "h", W, Z, "uh", "ch")
        left = compose_adjunctions(compose_adjunctions(Af, Ag, ctx), Ah, ctx)
        right = compose_adjunctions(Af, compose_adjunctions(Ag, Ah, ctx), ctx)
        for a, b in [(left.unit, right.unit), (left.counit, right.counit)]:
            status, *_ = check_equal(a, b, ctx)
            assert status == VERIFIED

    def test_triple_composite_verifies(self, chain):
        ctx, X, Y, Z, Af, Ag = chain
        W = ctx.declare_object("W")
        Ah = declare_adjunction(ctx, "hL", "h", W, Z, "uh", "ch")
        triple = compose_adjunctions(compose_adjunctions(Af, Ag, ctx), Ah, ctx)
        _, report = verify_zigzag(triple, ctx)
        assert report.status == VERIFIED


class TestTransport:
    def test_transported_verifies(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        moved = transport(Af, mu, nu, ctx)
        rec, report = verify_zigzag(moved, ctx)
        assert report.status == VERIFIED
        assert word_of(rec.left, ctx) == ("fLp",)
        assert word_of(rec.right, ctx) == ("fp",)

    def test_identity_transport_preserves_normal_forms(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        same = transport(Af, Id(Af.left), Id(Af.right), ctx)
        for a, b in [(same.unit, Af.unit), (same.counit, Af.counit)]:
            status, *_ = check_equal(a, b, ctx)
            assert status == VERIFIED

    def test_transport_there_and_back(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        moved = transport(Af, mu, nu, ctx)
        back = transport(moved, inverse(mu, ctx), inverse(nu, ctx), ctx)
        for a, b in [(back.unit, Af.unit), (back.counit, Af.counit)]:
            status, *_ = check_equal(a, b, ctx)
            assert status == VERIFIED

    def test_compose_with_transported_verifies(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        moved = transport(Af, mu, nu, ctx)
        rec, report = verify_zigzag(compose_adjunctions(moved, Ag, ctx), ctx)
        assert report.status == VERIFIED

    def test_wrong_source_rejected(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        with pytest.raises(TypingError):
            transport(Ag, mu, nu, ctx)

    def test_non_invertible_rejected(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        rho = ctx.declare("rho", Af.left, Af.left)  # not invertible
        with pytest.raises(TypingError):
            transport(Af, rho, Id(Af.right), ctx)


class TestDualize:
    @pytest.mark.parametrize("variant", ["op", "co", "coop"])
    def test_involution(self, chain, variant):
        ctx, *_, Af, Ag = chain
        assert dualize(dualize(Af, variant), variant) == Af

    def test_op_swaps_adjoints(self, chain):
        ctx, *_, Af, Ag = chain
        d = dualize(Af, "op")
        assert d.left == Af.right and d.right == Af.left
        assert d.unit == Af.unit and d.counit == Af.counit
        assert d.dual_tags == ("op",)

    def test_co_swaps_both(self, chain):
        ctx, *_, Af, Ag = chain
        d = dualize(Af, "co")
        assert d.left == Af.right and d.right == Af.left
        assert d.unit == Af.counit and d.counit == Af.unit

    def test_coop_swaps_structure_only(self, chain):
        ctx, *_, Af, Ag = chain
        d = dualize(Af, "coop")
        assert d.left == Af.left and d.right == Af.right
        assert d.unit == Af.counit and d.counit == Af.unit

    def test_coop_equals_op_then_co(self, chain):
        ctx, *_, Af, Ag = chain
        via = dualize(dualize(Af, "op"), "co")
        direct = dualize(Af, "coop")
        assert (via.left, via.right, via.unit, via.counit) == (
            direct.left,
            direct.right,
            direct.unit,
            direct.counit,
        )

    def test_unknown_variant_rejected(self, chain):
        ctx, *_, Af, Ag = chain
        with pytest.raises(TypingError):
            dualize(Af, "flip")


class TestComparison:
    def test_same_record_gives_identity(self, chain):
        ctx, *_, Af, Ag = chain
        report = comparison_cell(Af, Af, ctx)
        assert report.unit_equation == VERIFIED
        assert report.counit_equation == VERIFIED
        nf = normalize_cell(report.cell, ctx)
        assert nf.reduced and nf.atoms == ()

    def test_transport_of_right_gives_the_iso(self, iso_ctx):
        ctx, Af, Ag, mu, nu = iso_ctx
        moved = transport(Af, Id(Af.left), nu, ctx)
        report = comparison_cell(Af, moved, ctx)
        assert report.unit_equation == VERIFIED
        assert report.counit_equation == VERIFIED
        status, *_ = check_equal(report.cell, nu, ctx)
        assert status == VERIFIED

    def test_different_left_adjoints_rejected(self, chain):
        ctx, *_, Af, Ag = chain
        with pytest.raises(TypingError):
            comparison_cell(Af, Ag, ctx)


class TestErrorReporting:
    def test_swapped_boundaries_type_error_status(self, chain):
        ctx, *_, Af, Ag = chain
        bad = AdjunctionRecord(Af.left, Af.right, Af.counit, Af.unit, status=UNVERIFIED)
        rec, report = verify_zigzag(bad, ctx)
        assert report.status == "TypeError"
        assert rec.status == UNVERIFIED  # unchanged, no claim made

    def test_fuel_exhaustion_not_reduced(self, chain):
        ctx, *_, Af, Ag = chain
        comp_rec = compose_adjunctions(Af, Ag, ctx)
        rec, report = verify_zigzag(comp_rec, ctx, fuel=1)
        assert report.status == NOT_REDUCED
        assert rec.status == NOT_REDUCED
