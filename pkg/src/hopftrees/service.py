"""FastAPI service exposing the engine: enumeration, algebra operations,
order queries and the verification suites.

The CLI talks to these endpoints (in-process by default); all responses
are deterministic for fixed inputs.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import hopf, posets, verify
from .combinat import KINDS, InvariantError, ParseError, enumerate_objects, parse, render
from .config import CONFIG, CapExceeded, check_cap

app = FastAPI(title="hopftrees", version="0.1.0")


class ObjectOut(BaseModel):
    kind: str
    text: str


class ParseRequest(BaseModel):
    kind: str
    text: str


class EnumerateRequest(BaseModel):
    kind: str
    degree: int = Field(ge=0)
    count_only: bool = False


class EnumerateResponse(BaseModel):
    kind: str
    degree: int
    count: int
    items: list[ObjectOut] | None = None


class OpRequest(BaseModel):
    algebra: str
    basis: str = "F"
    operation: str
    operands: list[str] = Field(default_factory=list)
    target_basis: str | None = None
    which: str | None = None


class ElementOut(BaseModel):
    algebra: str
    basis: str
    terms: list[dict]
    tensor: bool = False


class OrderRequest(BaseModel):
    order: str
    query: str
    degree: int | None = None
    x: str | None = None
    y: str | None = None


class VerifyRequest(BaseModel):
    suite: str
    max_degree: int = 4
    jobs: int = 1


class VerifyResponse(BaseModel):
    suite: str
    max_degree: int
    passed: bool
    report: list[dict]


def _bad_request(e: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(e))


def _cap_error(e: CapExceeded) -> HTTPException:
    return HTTPException(status_code=422, detail=str(e))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/config")
def config() -> dict:
    return {"caps": {k: CONFIG.cap(k) for k in CONFIG.caps}, "jobs": CONFIG.jobs}


@app.post("/parse", response_model=ObjectOut)
def parse_object(req: ParseRequest) -> ObjectOut:
    if req.kind not in KINDS:
        raise _bad_request(ValueError(f"unknown kind {req.kind!r}"))
    try:
        obj = parse(req.kind, req.text)
    except (ParseError, InvariantError) as e:
        raise _bad_request(e)
    return ObjectOut(kind=req.kind, text=render(req.kind, obj))


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    try:
        check_cap(req.kind, req.degree)
        items = enumerate_objects(req.kind, req.degree)
    except CapExceeded as e:
        raise _cap_error(e)
    except ValueError as e:
        raise _bad_request(e)
    out = None
    if not req.count_only:
        out = [ObjectOut(kind=req.kind, text=render(req.kind, o)) for o in items]
    return EnumerateResponse(kind=req.kind, degree=req.degree, count=len(items), items=out)


def _element_out(x) -> ElementOut:
    data = x.to_json()
    return ElementOut(
        algebra=data["algebra"],
        basis=data["basis"],
        terms=data["terms"],
        tensor=isinstance(x, hopf.TensorElement),
    )


@app.post("/op", response_model=ElementOut)
def op_endpoint(req: OpRequest) -> ElementOut:
    try:
        return _element_out(_run_op(req))
    except CapExceeded as e:
        raise _cap_error(e)
    except (ParseError, InvariantError, hopf.BasisError, ValueError) as e:
        raise _bad_request(e)


def _run_op(req: OpRequest):
    alg = req.algebra
    if alg not in hopf.ALGEBRA_KIND:
        raise ValueError(f"unknown algebra {req.algebra!r}")
    basis = req.basis
    ops_needing = {"product": 2, "coproduct": 1, "antipode": 1, "tobasis": 1, "dualproduct": 2, "dendriform": None}
    if req.operation not in ops_needing:
        raise ValueError(f"unknown operation {req.operation!r}")
    elems = [hopf.basis_element(alg, basis, text) for text in req.operands]
    if req.operation == "product":
        x, y = elems
        if basis in ("F", "Q"):
            return hopf.product(alg, x, y)
        via = "Q" if alg == "NCQSym_Q" else "F"
        fx = hopf.change_basis(alg, basis, via, x)
        fy = hopf.change_basis(alg, basis, via, y)
        return hopf.change_basis(alg, via, basis, hopf.product(alg, fx, fy))
    if req.operation == "coproduct":
        (x,) = elems
        if basis in ("F", "Q"):
            return hopf.coproduct(alg, x)
        via = "F"
        fx = hopf.change_basis(alg, basis, via, x)
        t = hopf.coproduct(alg, fx)
        out: dict[tuple[str, ...], int] = {}
        for (a, b), c in t.terms.items():
            ma = hopf.change_basis(alg, via, basis, hopf.Element(alg, via, {a: 1}))
            mb = hopf.change_basis(alg, via, basis, hopf.Element(alg, via, {b: 1}))
            for k1, c1 in ma.terms.items():
                for k2, c2 in mb.terms.items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c * c1 * c2
        return hopf.TensorElement(alg, basis, out)
    if req.operation == "antipode":
        (x,) = elems
        return hopf.antipode(alg, x)
    if req.operation == "tobasis":
        (x,) = elems
        if not req.target_basis:
            raise ValueError("tobasis needs target_basis")
        return hopf.change_basis(alg, basis, req.target_basis, x)
    if req.operation == "dualproduct":
        x, y = [hopf.Element(alg, "Fdual", e.terms) for e in elems]
        return hopf.dual_product(alg, x, y)
    if req.operation == "dendriform":
        if not req.which:
            raise ValueError("dendriform needs which in <<, >>, dll, dgg")
        if req.which in ("<<", ">>"):
            x, y = elems
            return hopf.dendriform(alg, req.which, x, y)
        (x,) = elems
        return hopf.dendriform(alg, req.which, x)
    raise AssertionError


@app.post("/order")
def order_endpoint(req: OrderRequest) -> dict:
    if req.order not in posets.ORDERS:
        raise _bad_request(ValueError(f"unknown order {req.order!r}"))
    kind = posets.GROUND_KIND[req.order]
    try:
        return _run_order(req, kind)
    except CapExceeded as e:
        raise _cap_error(e)
    except (ParseError, InvariantError, ValueError) as e:
        raise _bad_request(e)


def _run_order(req: OrderRequest, kind: str) -> dict:
    def obj(text: str | None):
        if text is None:
            raise ValueError(f"query {req.query!r} needs operands")
        return parse(kind, text)

    q = req.query
    if q == "leq":
        return {"result": posets.leq(req.order, obj(req.x), obj(req.y))}
    if q == "covers":
        x = obj(req.x)
        check_cap(kind, posets.ops.degree(kind, x))
        return {"covers": [render(kind, c) for c in posets.up_covers(req.order, x)]}
    if q in ("join", "meet"):
        fn = posets.join if q == "join" else posets.meet
        res = fn(req.order, obj(req.x), obj(req.y))
        return {"result": None if res is None else render(kind, res)}
    if q == "mobius":
        return {"value": posets.mobius(req.order, obj(req.x), obj(req.y))}
    if q == "interval":
        return {"items": [render(kind, z) for z in posets.interval(req.order, obj(req.x), obj(req.y))]}
    if q == "components":
        if req.degree is None:
            raise ValueError("components needs degree")
        comps = posets.components(req.order, req.degree)
        return {
            "order": req.order,
            "degree": req.degree,
            "components": [[render(kind, x) for x in comp] for comp in comps],
        }
    if q == "hasse":
        if req.degree is None:
            raise ValueError("hasse needs degree")
        return {"dot": posets.hasse_dot(req.order, req.degree)}
    if q == "covers-list":
        if req.degree is None:
            raise ValueError("covers-list needs degree")
        cache = posets.poset(req.order, req.degree)
        pairs = []
        for i, x in enumerate(cache.elements):
            for j in sorted(cache.covers[i]):
                pairs.append([render(kind, x), render(kind, cache.elements[j])])
        return {"order": req.order, "degree": req.degree, "covers": pairs}
    raise ValueError(f"unknown query {q!r}")


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    if req.suite not in verify.SUITES:
        raise _bad_request(ValueError(f"unknown suite {req.suite!r}"))
    try:
        report = verify.run_suite(req.suite, req.max_degree, req.jobs)
    except CapExceeded as e:
        raise _cap_error(e)
    except ValueError as e:
        raise _bad_request(e)
    return VerifyResponse(
        suite=req.suite, max_degree=req.max_degree, passed=report.passed, report=report.to_json()
    )
