"""Command-line client for the decision service.

Each run sends one request to the HTTP service and prints exactly one JSON
run report on stdout: {command, inputs, outcome, elapsed_ms}. By default
the request is dispatched to the bundled application in-process (no server
needed); --server routes it to a running instance instead.

Exit codes: 0 the computation succeeded, 1 the queried membership or
property came out negative, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
import time
from typing import Any

import httpx


def _load_json_arg(text: str) -> Any:
    """Inline JSON when the value parses as JSON, else a path to read."""
    text = text.strip()
    if text and text[0] in "[{\"0123456789-":
        try:
            return json.loads(text)
        except json.JSONDecodeError:
            pass
    with open(text, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _poly_arg(text: str) -> list[str]:
    data = _load_json_arg(text)
    if not isinstance(data, list):
        raise ValueError("polynomial must be a JSON array of coefficient strings")
    return [str(c) for c in data]


def _matrix_arg(text: str) -> list[list[str]]:
    data = _load_json_arg(text)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a JSON array of arrays of rational strings")
    return [[str(e) for e in row] for row in data]


def _order_arg(text: str) -> Any:
    # builtin name, inline JSON object, or path to an order file
    stripped = text.strip()
    if stripped.startswith("{") or stripped.endswith(".json"):
        return _load_json_arg(stripped)
    return stripped


def _elements_arg(text: str) -> list[list[str]]:
    data = _load_json_arg(text)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("elements must be a JSON array of coordinate arrays")
    return [[str(c) for c in row] for row in data]


def _sample_spec(args: argparse.Namespace) -> dict:
    spec: dict = {}
    if getattr(args, "elements", None):
        spec["elements"] = _elements_arg(args.elements)
    if getattr(args, "mod", None):
        spec["mod"] = args.mod
    if getattr(args, "count", None):
        spec["random_count"] = args.count
        spec["seed"] = args.seed
        spec["coord_bound"] = args.bound
    if not spec:
        raise ValueError("give a sample via --elements, --mod and/or --count")
    return spec


def call_service(
    method: str, path: str, payload: dict | None, server: str | None
) -> tuple[int, Any]:
    """POST/GET against a remote server or the in-process application."""
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.request(method, path, json=payload)
        return resp.status_code, resp.json()

    from .service import app

    async def _go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://intvalpoly", timeout=600.0
        ) as client:
            return await client.request(method, path, json=payload)

    resp = asyncio.run(_go())
    return resp.status_code, resp.json()


def _negative(command: str, outcome: dict) -> bool:
    """Whether the computed outcome is a negative answer (exit code 1)."""
    if command in ("member-int", "member-intval"):
        return outcome.get("verdict") == "no"
    if command == "integral-check":
        return not outcome.get("integral", True)
    if command == "pullback":
        return not outcome.get("member", True)
    if command == "certificate-verify":
        return not outcome.get("ok", True)
    if command == "chain":
        return not outcome.get("implications_ok", True)
    if command.startswith("density"):
        return bool(outcome.get("failures"))
    if command == "examples":
        return not outcome.get("ok", True)
    return False


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(json.dumps(report, separators=(",", ":")))


def _run_request(
    command: str,
    method: str,
    path: str,
    payload: dict | None,
    args: argparse.Namespace,
) -> int:
    inputs = payload if payload is not None else {}
    started = time.monotonic()
    try:
        status, outcome = call_service(method, path, payload, args.server)
    except httpx.HTTPError as exc:
        _emit({"command": command, "inputs": inputs, "error": f"transport: {exc}"}, args.pretty)
        return 2
    elapsed_ms = int((time.monotonic() - started) * 1000)
    if status != 200:
        detail = outcome.get("detail", outcome) if isinstance(outcome, dict) else outcome
        _emit(
            {"command": command, "inputs": inputs, "error": detail, "status": status},
            args.pretty,
        )
        return 2
    _emit(
        {"command": command, "inputs": inputs, "outcome": outcome, "elapsed_ms": elapsed_ms},
        args.pretty,
    )
    return 1 if _negative(command, outcome) else 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--server", help="base URL of a running service (default: in-process)")
    p.add_argument("--pretty", action="store_true", help="indent the JSON report")
    p.add_argument("--json", action="store_true", help="compact JSON output (default)")


def _add_sample_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--elements", help="JSON array of coordinate arrays (inline or file)")
    p.add_argument("--mod", type=int, help="include all residues modulo this")
    p.add_argument("--count", type=int, help="number of random elements to include")
    p.add_argument("--seed", type=int, default=0, help="seed for random sampling")
    p.add_argument("--bound", type=int, default=20, help="coordinate bound for random elements")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="intvalpoly",
        description="Exact membership tests for integer-valued and integral-valued "
        "polynomials on finite-rank rings.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("minpoly", "minimal polynomial of an exact rational matrix"),
        ("charpoly", "characteristic polynomial of an exact rational matrix"),
        ("integral-check", "does the matrix solve a monic integer polynomial?"),
        ("spectrum", "monic squarefree polynomial of the matrix eigenvalues"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--matrix", required=True, help="JSON rows (inline or file)")
        _add_common(p)

    p = sub.add_parser("companion", help="companion matrix of a monic polynomial")
    p.add_argument("--poly", required=True, help="JSON coefficients, ascending (inline or file)")
    _add_common(p)

    p = sub.add_parser("member-int", help="does f map the order into itself? (complete decision)")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True, help="builtin name, JSON object, or order file")
    _add_common(p)

    p = sub.add_parser("member-intval", help="does f send the sampled elements to integral elements?")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--whole-algebra", action="store_true", help="label a clean pass unknown-bounded")
    _add_sample_flags(p)
    _add_common(p)

    p = sub.add_parser("pullback", help="is f in Z[X] + mu*Q[X]?")
    p.add_argument("--poly", required=True)
    p.add_argument("--modulus", required=True, help="monic integer polynomial mu")
    _add_common(p)

    cert = sub.add_parser("certificate", help="build or verify monic integrality certificates")
    cert_sub = cert.add_subparsers(dest="certificate_command", required=True)
    p = cert_sub.add_parser("build", help="product of all monic residue representatives")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True)
    _add_common(p)
    p = cert_sub.add_parser("verify", help="check phi(f) in the sampled pullbacks")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--certificate", required=True, help="monic integer polynomial phi")
    _add_sample_flags(p)
    _add_common(p)

    p = sub.add_parser("chain", help="pullback => self-map => integral-valued, on a sample")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True)
    _add_sample_flags(p)
    _add_common(p)

    p = sub.add_parser("three-squares", help="decompose n as a sum of three squares")
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("hurwitz-match", help="hurwitz-order element with the same minimal polynomial")
    p.add_argument("--quaternion", required=True, help="JSON array of 4 rationals on (1,i,j,k)")
    _add_common(p)

    dens = sub.add_parser("density", help="polynomially-dense-subset experiments")
    dens_sub = dens.add_subparsers(dest="density_command", required=True)
    p = dens_sub.add_parser("refute", help="witness that the order is not dense in its integral closure")
    p.add_argument("--poly", required=True)
    p.add_argument("--order", required=True)
    p.add_argument("--candidates", help="JSON array of coordinate arrays (default: shipped list)")
    _add_common(p)
    p = dens_sub.add_parser("companion", help="integrality transfer along the companion family")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--height", type=int, default=1)
    p.add_argument("--irreducible-only", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    _add_common(p)
    p = dens_sub.add_parser("triangular", help="binomial values on random triangular matrices")
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    _add_common(p)
    p = dens_sub.add_parser("spectrum-transfer", help="equal spectra give equal integrality")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    _add_common(p)

    p = sub.add_parser("examples", help="run a bundled end-to-end example")
    p.add_argument("name", choices=["zsqrt3", "hurwitz", "lipschitz", "triangular", "companion"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="sample size for the randomized examples")
    _add_common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command

    try:
        if cmd == "serve":
            import uvicorn

            from .service import app

            uvicorn.run(app, host=args.host, port=args.port)
            return 0

        if cmd in ("minpoly", "charpoly", "integral-check", "spectrum"):
            payload = {"matrix": _matrix_arg(args.matrix)}
            return _run_request(cmd, "POST", f"/{cmd}", payload, args)

        if cmd == "companion":
            return _run_request(cmd, "POST", "/companion", {"poly": _poly_arg(args.poly)}, args)

        if cmd == "member-int":
            payload = {"poly": _poly_arg(args.poly), "order": _order_arg(args.order)}
            return _run_request(cmd, "POST", "/member-int", payload, args)

        if cmd == "member-intval":
            payload = {
                "poly": _poly_arg(args.poly),
                "order": _order_arg(args.order),
                "sample": _sample_spec(args),
                "whole_algebra": args.whole_algebra,
            }
            return _run_request(cmd, "POST", "/member-intval", payload, args)

        if cmd == "pullback":
            payload = {"poly": _poly_arg(args.poly), "modulus": _poly_arg(args.modulus)}
            return _run_request(cmd, "POST", "/pullback", payload, args)

        if cmd == "certificate":
            if args.certificate_command == "build":
                payload = {"poly": _poly_arg(args.poly), "order": _order_arg(args.order)}
                return _run_request("certificate-build", "POST", "/certificate/build", payload, args)
            payload = {
                "certificate": _poly_arg(args.certificate),
                "poly": _poly_arg(args.poly),
                "order": _order_arg(args.order),
                "sample": _sample_spec(args),
            }
            return _run_request("certificate-verify", "POST", "/certificate/verify", payload, args)

        if cmd == "chain":
            payload = {
                "poly": _poly_arg(args.poly),
                "order": _order_arg(args.order),
                "sample": _sample_spec(args),
            }
            return _run_request(cmd, "POST", "/chain", payload, args)

        if cmd == "three-squares":
            return _run_request(cmd, "GET", f"/three-squares/{args.n}", None, args)

        if cmd == "hurwitz-match":
            payload = {"quaternion": _poly_arg(args.quaternion)}
            return _run_request(cmd, "POST", "/hurwitz-match", payload, args)

        if cmd == "density":
            dc = args.density_command
            if dc == "refute":
                payload = {"poly": _poly_arg(args.poly), "order": _order_arg(args.order)}
                if args.candidates:
                    payload["candidates"] = _elements_arg(args.candidates)
                return _run_request("density-refute", "POST", "/density/refute", payload, args)
            if dc == "companion":
                payload = {
                    "degree": args.degree,
                    "height": args.height,
                    "irreducible_only": args.irreducible_only,
                    "seed": args.seed,
                    "count": args.count,
                }
                return _run_request("density-companion", "POST", "/density/companion", payload, args)
            if dc == "triangular":
                payload = {"max_dim": args.max_dim, "seed": args.seed, "count": args.count}
                return _run_request("density-triangular", "POST", "/density/triangular", payload, args)
            payload = {"seed": args.seed, "count": args.count}
            return _run_request(
                "density-spectrum-transfer", "POST", "/density/spectrum-transfer", payload, args
            )

        if cmd == "examples":
            payload: dict = {"seed": args.seed}
            if args.count is not None:
                payload["count"] = args.count
            return _run_request("examples", "POST", f"/examples/{args.name}", payload, args)

    except (ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"command": cmd, "error": str(exc)}, getattr(args, "pretty", False))
        return 2

    raise AssertionError(f"unhandled command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
