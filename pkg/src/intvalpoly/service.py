"""HTTP facade over the decision procedures.

Every endpoint is a pure function of its request body; domain errors
(malformed algebra data, violated preconditions) surface as 400 with the
exception message, schema errors as FastAPI's usual 422.
"""

from __future__ import annotations

import random

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import density as density_mod
from . import membership as membership_mod
from .examples import EXAMPLE_NAMES, run_example
from .matrices import (
    Matrix,
    characteristic_polynomial,
    companion,
    eval_poly_matrix,
    is_integral_matrix,
    minimal_polynomial,
    spectrum,
)
from .orders import Element, Order, builtin, builtin_names, element_from_quaternion, quaternion_coords
from .polynomials import Poly, normalize
from . import schemas as S

app = FastAPI(
    title="intvalpoly",
    description="Exact membership tests for integer-valued and integral-valued "
    "polynomials on finite-rank rings.",
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def _domain_error(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _poly(coeffs: S.PolyJSON) -> Poly:
    return Poly.from_strings(coeffs)


def _poly_out(p: Poly) -> S.PolyResponse:
    return S.PolyResponse(coefficients=p.to_strings(), pretty=str(p))


def _order(ref: S.OrderRef) -> Order:
    if isinstance(ref, str):
        return builtin(ref)
    return Order.from_json(ref.model_dump())


def _sample(order: Order, spec: S.SampleSpec) -> list[Element]:
    out: list[Element] = []
    if spec.elements:
        out.extend(order.element(coords) for coords in spec.elements)
    if spec.mod:
        out.extend(order.residues(spec.mod))
    if spec.random_count:
        rng = random.Random(spec.seed)
        b = spec.coord_bound
        for _ in range(spec.random_count):
            out.append(order.element([rng.randint(-b, b) for _ in range(order.rank)]))
    if not out:
        raise ValueError("sample spec produced no elements; give elements, mod or random_count")
    return out


def _verdict_out(v: membership_mod.MembershipVerdict, f: Poly | None = None) -> S.VerdictResponse:
    witness_value = None
    if v.witness is not None and f is not None:
        witness_value = membership_mod.value_at(f, v.witness).to_strings()
    return S.VerdictResponse(
        verdict=v.verdict,
        checked_count=v.checked_count,
        witness=v.witness.to_strings() if v.witness is not None else None,
        witness_value=witness_value,
        certificate=v.certificate.to_strings() if v.certificate is not None else None,
    )


@app.get("/health", response_model=S.HealthResponse)
def health() -> S.HealthResponse:
    return S.HealthResponse(status="ok")


@app.get("/orders", response_model=S.OrdersResponse)
def orders_index() -> S.OrdersResponse:
    return S.OrdersResponse(builtins=builtin_names())


@app.post("/minpoly", response_model=S.PolyResponse)
def minpoly(req: S.MatrixRequest) -> S.PolyResponse:
    return _poly_out(minimal_polynomial(Matrix(req.matrix)))


@app.post("/charpoly", response_model=S.PolyResponse)
def charpoly(req: S.MatrixRequest) -> S.PolyResponse:
    return _poly_out(characteristic_polynomial(Matrix(req.matrix)))


@app.post("/integral-check", response_model=S.IntegralCheckResponse)
def integral_check(req: S.MatrixRequest) -> S.IntegralCheckResponse:
    mu = minimal_polynomial(Matrix(req.matrix))
    return S.IntegralCheckResponse(integral=mu.is_integer, minimal_polynomial=_poly_out(mu))


@app.post("/spectrum", response_model=S.PolyResponse)
def spectrum_endpoint(req: S.MatrixRequest) -> S.PolyResponse:
    return _poly_out(spectrum(Matrix(req.matrix)))


@app.post("/companion", response_model=S.MatrixResponse)
def companion_endpoint(req: S.CompanionRequest) -> S.MatrixResponse:
    return S.MatrixResponse(matrix=companion(_poly(req.poly)).to_strings())


@app.post("/member-int", response_model=S.VerdictResponse)
def member_int_endpoint(req: S.MemberIntRequest) -> S.VerdictResponse:
    f = _poly(req.poly)
    return _verdict_out(membership_mod.member_int(f, _order(req.order)), f)


@app.post("/member-intval", response_model=S.VerdictResponse)
def member_intval_endpoint(req: S.MemberIntvalRequest) -> S.VerdictResponse:
    f = _poly(req.poly)
    order = _order(req.order)
    sample = _sample(order, req.sample)
    return _verdict_out(
        membership_mod.member_intval_on(f, sample, whole_algebra=req.whole_algebra), f
    )


@app.post("/pullback", response_model=S.PullbackResponse)
def pullback_endpoint(req: S.PullbackRequest) -> S.PullbackResponse:
    f = _poly(req.poly)
    mu = _poly(req.modulus)
    member = membership_mod.pullback_member(f, mu)
    return S.PullbackResponse(member=member, remainder=_poly_out(f % mu))


@app.post("/certificate/build", response_model=S.CertificateBuildResponse)
def certificate_build(req: S.CertificateBuildRequest) -> S.CertificateBuildResponse:
    f = _poly(req.poly)
    order = _order(req.order)
    phi = membership_mod.certificate_phi(f, order)
    _, d = normalize(f)
    n = order.spectral_degree
    return S.CertificateBuildResponse(
        certificate=phi.to_strings(),
        degree=phi.degree,
        factor_count=membership_mod.certificate_factor_count(d, n),
        denominator=d,
        modulus=(d ** (n - 1)) ** 2,
    )


@app.post("/certificate/verify", response_model=S.CertificateVerifyResponse)
def certificate_verify(req: S.CertificateVerifyRequest) -> S.CertificateVerifyResponse:
    order = _order(req.order)
    sample = _sample(order, req.sample)
    ok = membership_mod.verify_certificate(
        _poly(req.certificate), _poly(req.poly), order, sample
    )
    return S.CertificateVerifyResponse(ok=ok, sample_size=len(sample))


@app.post("/chain", response_model=S.ChainResponse)
def chain_endpoint(req: S.ChainRequest) -> S.ChainResponse:
    order = _order(req.order)
    sample = _sample(order, req.sample)
    rep = membership_mod.chain_check(_poly(req.poly), order, sample)
    return S.ChainResponse(
        pullback_sample=rep.pullback_sample,
        member_int=rep.member_int_verdict,
        member_intval_sample=rep.member_intval_verdict,
        implications_ok=rep.implications_ok,
        sample_size=rep.sample_size,
        checked_count=rep.checked_count,
        witness=rep.witness.to_strings() if rep.witness is not None else None,
    )


@app.get("/three-squares/{n}", response_model=S.ThreeSquaresResponse)
def three_squares_endpoint(n: int) -> S.ThreeSquaresResponse:
    t = density_mod.three_squares(n)
    return S.ThreeSquaresResponse(
        n=t.n, decomposition=list(t.decomposition) if t.decomposition else None
    )


@app.post("/hurwitz-match", response_model=S.HurwitzMatchResponse)
def hurwitz_match_endpoint(req: S.HurwitzMatchRequest) -> S.HurwitzMatchResponse:
    q = element_from_quaternion(builtin("hurwitz"), req.quaternion)
    match = density_mod.hurwitz_match(q)
    return S.HurwitzMatchResponse(
        match_quaternion=[str(c) for c in quaternion_coords(match)],
        match_coords=match.to_strings(),
        minimal_polynomial=_poly_out(match.min_poly()),
    )


@app.post("/density/refute", response_model=S.DensityReport)
def density_refute_endpoint(req: S.DensityRefuteRequest) -> S.DensityReport:
    f = _poly(req.poly)
    order = _order(req.order)
    if req.candidates is None:
        candidates = density_mod.builtin_candidates(order)
    else:
        candidates = [order.element(c) for c in req.candidates]
    w = density_mod.density_refute(f, order, candidates)
    failures = [] if w is None else [{"candidate": w.to_strings()}]
    return S.DensityReport(
        check="density-refute",
        instances=len(candidates),
        failures=failures,
        witness=w.to_strings() if w is not None else None,
    )


@app.post("/density/companion", response_model=S.DensityReport)
def density_companion_endpoint(req: S.DensityCompanionRequest) -> S.DensityReport:
    from .examples import random_rational_poly, random_unimodular

    rng = random.Random(req.seed)
    family = list(
        density_mod.companion_family(req.degree, req.height, req.irreducible_only)
    )
    if not family:
        raise ValueError("empty companion family")
    failures = []
    for _ in range(req.count):
        C = family[rng.randrange(len(family))]
        U, Uinv = random_unimodular(rng, C.n)
        f = random_rational_poly(rng)
        if not density_mod.spectrum_transfer_check(f, [(C, U * C * Uinv)]):
            failures.append({"companion": C.to_strings(), "poly": str(f)})
    return S.DensityReport(
        check="companion-transfer", instances=req.count, failures=failures
    )


@app.post("/density/triangular", response_model=S.DensityReport)
def density_triangular_endpoint(req: S.DensityTriangularRequest) -> S.DensityReport:
    from .examples import random_upper_triangular
    from .polynomials import binomial_poly

    rng = random.Random(req.seed)
    failures = []
    for _ in range(req.count):
        k = rng.randint(1, req.max_dim)
        M = random_upper_triangular(rng, k)
        f = binomial_poly(rng.randint(0, 6))
        if not is_integral_matrix(eval_poly_matrix(f, M)):
            failures.append({"matrix": M.to_strings(), "poly": str(f)})
        if density_mod.triangular_spectrum(M) != spectrum(M):
            failures.append({"matrix": M.to_strings(), "kind": "spectrum"})
    return S.DensityReport(
        check="triangular-binomial", instances=req.count, failures=failures
    )


@app.post("/density/spectrum-transfer", response_model=S.DensityReport)
def density_spectrum_transfer_endpoint(
    req: S.DensitySpectrumTransferRequest,
) -> S.DensityReport:
    from .examples import random_rational_poly, random_unimodular

    rng = random.Random(req.seed)
    failures = []
    for _ in range(req.count):
        deg = rng.randint(1, 3)
        p = Poly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        C = companion(p)
        U, Uinv = random_unimodular(rng, deg)
        f = random_rational_poly(rng)
        if not density_mod.spectrum_transfer_check(f, [(C, U * C * Uinv)]):
            failures.append({"p": str(p), "poly": str(f)})
    return S.DensityReport(
        check="spectrum-transfer", instances=req.count, failures=failures
    )


@app.post("/examples/{name}", response_model=S.ExampleReport)
def examples_endpoint(name: str, req: S.ExampleRequest) -> S.ExampleReport:
    if name not in EXAMPLE_NAMES:
        raise ValueError(f"unknown example {name!r}; available: {', '.join(EXAMPLE_NAMES)}")
    return S.ExampleReport(**run_example(name, seed=req.seed, count=req.count))


__all__ = ["app"]
