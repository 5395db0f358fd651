"""HTTP service exposing the library operations, plus the shared handlers.

Every endpoint is a thin pydantic wrapper over a pure handler function; the
command-line client calls the same handlers in-process, so both front ends
produce identical results for identical inputs.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import adjunctions as adj
from . import dexterity as dex
from . import factbase as fb
from . import opposites as ops
from . import schema as sch
from . import trees
from .errors import AdjkitError, ParseError
from .terms import FormalContext, format_cell, parse_cell

# ---------------------------------------------------------------------------
# context documents: a JSON description of generators and adjunction records


def load_context_document(doc: dict) -> tuple[FormalContext, dict[str, adj.AdjunctionRecord]]:
    """Build a context and named records from a JSON document.

    Shape: {"objects": [name], "generators": [{name, source, target,
    invertible?}], "adjunctions": [{name, left, right, unit, counit,
    status?}]} with boundaries and record cells as prefix term strings.
    """
    ctx = FormalContext()
    for name in doc.get("objects", []):
        ctx.declare_object(name)
    for gen in doc.get("generators", []):
        ctx.declare(
            gen["name"],
            parse_cell(gen["source"], ctx),
            parse_cell(gen["target"], ctx),
            invertible=bool(gen.get("invertible", False)),
        )
    records: dict[str, adj.AdjunctionRecord] = {}
    for rec in doc.get("adjunctions", []):
        record = adj.AdjunctionRecord(
            left=parse_cell(rec["left"], ctx),
            right=parse_cell(rec["right"], ctx),
            unit=parse_cell(rec["unit"], ctx),
            counit=parse_cell(rec["counit"], ctx),
            status=rec.get("status", adj.AXIOM),
        )
        adj.check_record_typing(record, ctx)
        if record.status == adj.AXIOM:
            adj.register_axiom(ctx, record)
        records[rec["name"]] = record
    return ctx, records


def record_to_json(record: adj.AdjunctionRecord) -> dict:
    return {
        "left": format_cell(record.left),
        "right": format_cell(record.right),
        "unit": format_cell(record.unit),
        "counit": format_cell(record.counit),
        "status": record.status,
    }


# ---------------------------------------------------------------------------
# handlers


def handle_parity(a: str, b: str) -> str:
    return dex.parity_pair(
        dex.DexterityFunction.from_string(a), dex.DexterityFunction.from_string(b)
    )


def handle_canonical(a: str) -> str:
    return str(dex.canonical(dex.DexterityFunction.from_string(a)))


def handle_interchange(a: str, j: int) -> str:
    return str(dex.interchange(dex.DexterityFunction.from_string(a), j))


def handle_normalize(a: str, b: str) -> list[int]:
    trace = dex.normalize_witness(
        dex.DexterityFunction.from_string(a), dex.DexterityFunction.from_string(b)
    )
    return trace.to_json()


def handle_saturate(doc: dict) -> dict:
    return fb.factbase_to_json(fb.saturate(fb.factbase_from_json(doc)))


def handle_oppose(a: str, b: str, k: int, n_levels: int) -> str:
    return str(
        ops.op_for_pair(
            dex.DexterityFunction.from_string(a),
            dex.DexterityFunction.from_string(b),
            k,
            n_levels,
        )
    )


def handle_opbuild(variant: str, n_levels: int) -> str:
    return str(ops.build_opposite(variant, n_levels))


def handle_tree_classes(n: int) -> str:
    return str(trees.class_count_recurrence(n))


def handle_tree_brute(n: int) -> dict:
    count, reps = trees.brute_force_classes(n)
    return {
        "depth": n,
        "class_count": str(count),
        "representatives": [trees.format_tree(t) for t in reps],
    }


def handle_wreath(n: int) -> str:
    return str(trees.wreath_involutions(n))


def handle_tree_equiv(s: str, t: str) -> dict:
    equivalent, witness = trees.are_tree_equivalent(
        trees.parse_tree(s), trees.parse_tree(t)
    )
    return {
        "equivalent": equivalent,
        "witness": None
        if witness is None
        else [list(path) for path in witness],
    }


def handle_schema(base: str, level: int, dexterity: str, full: bool) -> dict:
    if set(dexterity) <= {"L", "R"} and "(" not in dexterity:
        source = dex.DexterityFunction.from_string(dexterity)
        tower = sch.generate_schema(base, level, source, "full" if full else "one_sided")
    else:
        tower = sch.generate_schema(
            base, level, trees.parse_tree(dexterity), "full" if full else "one_sided"
        )
    return sch.tower_to_json(tower)


def handle_compose_adj(doc: dict, fuel: int = 10_000) -> dict:
    ctx, records = load_context_document(doc)
    names = doc.get("compose")
    if not isinstance(names, list) or len(names) != 2:
        raise ParseError('document must name two records under "compose"')
    try:
        first, second = records[names[0]], records[names[1]]
    except KeyError as missing:
        raise ParseError(f"unknown record {missing.args[0]!r}") from None
    composed = adj.compose_adjunctions(first, second, ctx)
    verified, report = adj.verify_zigzag(composed, ctx, fuel)
    out = record_to_json(verified)
    out["zigzag"] = report.status
    return out


def handle_verify_zigzag(doc: dict, fuel: int = 10_000) -> dict:
    ctx, records = load_context_document(doc)
    name = doc.get("verify")
    if name not in records:
        raise ParseError(f'document must name a record under "verify" (got {name!r})')
    _, report = adj.verify_zigzag(records[name], ctx, fuel)
    return {
        "record": name,
        "status": report.status,
        "zig_steps": report.zig[0].steps,
        "zag_steps": report.zag[0].steps,
    }


# ---------------------------------------------------------------------------
# pydantic models and FastAPI app


class ParityRequest(BaseModel):
    a: str
    b: str


class StringResult(BaseModel):
    result: str


class CanonicalRequest(BaseModel):
    a: str


class InterchangeRequest(BaseModel):
    a: str
    j: int


class NormalizeRequest(BaseModel):
    a: str
    b: str


class WitnessResult(BaseModel):
    positions: list[int]


class SaturateRequest(BaseModel):
    morphisms: list[dict] = Field(default_factory=list)
    adjunctions: list[dict] = Field(default_factory=list)
    classes: list[dict] = Field(default_factory=list)
    n_adjunctible: list[dict] = Field(default_factory=list)
    ambidextrous: list[dict] = Field(default_factory=list)


class OpposeRequest(BaseModel):
    a: str
    b: str
    k: int
    n_levels: int


class OpBuildRequest(BaseModel):
    variant: str
    n_levels: int


class DepthRequest(BaseModel):
    n: int


class TreeEquivRequest(BaseModel):
    s: str
    t: str


class TreeEquivResult(BaseModel):
    equivalent: bool
    witness: Optional[list[list[str]]] = None


class SchemaRequest(BaseModel):
    base: str
    level: int
    dexterity: str
    full: bool = False


class ContextDocument(BaseModel):
    objects: list[str] = Field(default_factory=list)
    generators: list[dict] = Field(default_factory=list)
    adjunctions: list[dict] = Field(default_factory=list)
    compose: Optional[list[str]] = None
    verify: Optional[str] = None
    fuel: int = 10_000


def create_app() -> FastAPI:
    app = FastAPI(title="adjkit", version="1.0.0")

    @app.exception_handler(AdjkitError)
    async def _domain_error(_: Request, exc: AdjkitError) -> JSONResponse:
        code = 400 if isinstance(exc, ParseError) else 422
        return JSONResponse(status_code=code, content={"detail": str(exc)})

    @app.post("/dexterity/parity", response_model=StringResult)
    def parity(req: ParityRequest) -> StringResult:
        return StringResult(result=handle_parity(req.a, req.b))

    @app.post("/dexterity/canonical", response_model=StringResult)
    def canonical(req: CanonicalRequest) -> StringResult:
        return StringResult(result=handle_canonical(req.a))

    @app.post("/dexterity/interchange", response_model=StringResult)
    def interchange(req: InterchangeRequest) -> StringResult:
        return StringResult(result=handle_interchange(req.a, req.j))

    @app.post("/dexterity/normalize", response_model=WitnessResult)
    def normalize(req: NormalizeRequest) -> WitnessResult:
        return WitnessResult(positions=handle_normalize(req.a, req.b))

    @app.post("/factbase/saturate")
    def saturate(req: SaturateRequest) -> dict:
        return handle_saturate(req.model_dump())

    @app.post("/opposites/pair", response_model=StringResult)
    def oppose(req: OpposeRequest) -> StringResult:
        return StringResult(result=handle_oppose(req.a, req.b, req.k, req.n_levels))

    @app.post("/opposites/build", response_model=StringResult)
    def opbuild(req: OpBuildRequest) -> StringResult:
        return StringResult(result=handle_opbuild(req.variant, req.n_levels))

    @app.post("/trees/classes", response_model=StringResult)
    def tree_classes(req: DepthRequest) -> StringResult:
        return StringResult(result=handle_tree_classes(req.n))

    @app.post("/trees/brute")
    def tree_brute(req: DepthRequest) -> dict:
        return handle_tree_brute(req.n)

    @app.post("/trees/wreath", response_model=StringResult)
    def wreath(req: DepthRequest) -> StringResult:
        return StringResult(result=handle_wreath(req.n))

    @app.post("/trees/equivalent", response_model=TreeEquivResult)
    def tree_equiv(req: TreeEquivRequest) -> TreeEquivResult:
        return TreeEquivResult(**handle_tree_equiv(req.s, req.t))

    @app.post("/schema/generate")
    def schema_generate(req: SchemaRequest) -> dict:
        return handle_schema(req.base, req.level, req.dexterity, req.full)

    @app.post("/adjunctions/compose")
    def compose(doc: ContextDocument) -> dict:
        return handle_compose_adj(doc.model_dump(exclude_none=True), doc.fuel)

    @app.post("/adjunctions/verify")
    def verify(doc: ContextDocument) -> dict:
        return handle_verify_zigzag(doc.model_dump(exclude_none=True), doc.fuel)

    return app


app = create_app()
