"""Command-line interface: spectrum reports, transform evaluation, and the
verification suites, in JSON or CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .jacobi import phi_n
from .spectral import (
    ModelParams,
    Region,
    classify,
    discrete_spectrum,
    discrete_weight_N,
)
from .transform import _kernel_row, _x_grid
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser"]

_MIN_NODES = 8


def _complex_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyptrans",
        description="Hypergeometric spectral transform: spectrum, transform "
        "evaluation, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)
        p.add_argument("--kappa", type=float, required=True)
        p.add_argument("--x-nodes", type=int, default=256)
        p.add_argument("--s-nodes", type=int, default=200)
        p.add_argument("--t-nodes", type=int, default=100)
        p.add_argument("--truncation-s", type=float, default=12.0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    p_spec = sub.add_parser("spectrum", help="band endpoints and discrete eigenvalues")
    add_common(p_spec)

    p_tr = sub.add_parser("transform", help="evaluate the transform of a function")
    add_common(p_tr)
    p_tr.add_argument(
        "--function",
        default="jacobi:0",
        help="jacobi:N | poly:c0,c1,... | kernel:REGION:LAMBDA "
        "(the transformed function; kernel uses the plus component on the double band)",
    )
    p_tr.add_argument(
        "--lam",
        type=float,
        action="append",
        default=None,
        help="spectral point(s) to evaluate at; defaults to one sample per region",
    )

    p_ver = sub.add_parser("verify", help="run a verification suite")
    add_common(p_ver)
    p_ver.add_argument("--suite", choices=sorted(SUITES), default="all")
    return parser


def _config_dict(args) -> dict:
    return {
        "command": args.command,
        "alpha": args.alpha,
        "beta": args.beta,
        "kappa": args.kappa,
        "x_nodes": args.x_nodes,
        "s_nodes": args.s_nodes,
        "t_nodes": args.t_nodes,
        "truncation_s": args.truncation_s,
    }


def _validate(args) -> ModelParams:
    for name in ("x_nodes", "s_nodes", "t_nodes"):
        if getattr(args, name) < _MIN_NODES:
            raise ValueError(f"{name.replace('_', '-')} must be at least {_MIN_NODES}")
    if args.truncation_s <= 0.0:
        raise ValueError("truncation-s must be positive")
    return ModelParams(args.alpha, args.beta, args.kappa)


def _flatten_row(row: dict) -> dict:
    """Expand complex-valued {re, im} entries into paired re/im columns."""
    flat = {}
    for key, value in row.items():
        if isinstance(value, dict) and set(value) == {"re", "im"}:
            flat[f"{key}_re"] = value["re"]
            flat[f"{key}_im"] = value["im"]
        elif isinstance(value, list):
            for i, item in enumerate(value):
                flat[f"{key}{i}_re"] = item["re"]
                flat[f"{key}{i}_im"] = item["im"]
        else:
            flat[key] = value
    return flat


def _emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        rows = [_flatten_row(r) for r in report["results"]]
        fields = []
        for row in rows:
            fields.extend(k for k in row if k not in fields)
        buf = io.StringIO()
        for key, value in report["config"].items():
            buf.write(f"# {key}={value}\n")
        writer = csv.DictWriter(buf, fieldnames=fields, restval="")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    params = _validate(args)
    results = [
        {"band": "omega2", "endpoint": params.omega2_endpoint},
        {"band": "omega1", "endpoint": params.omega1_endpoint},
    ]
    points = discrete_spectrum(params)
    if points:
        for pt in points:
            results.append(
                {
                    "lambda": pt.lam,
                    "n": pt.n,
                    "delta": pt.delta.real,
                    "eta": pt.eta.real,
                    "N": discrete_weight_N(pt, params),
                }
            )
    else:
        results.append({"discrete": "none"})
    _emit({"config": _config_dict(args), "results": results}, args)
    return 0


def _parse_function(spec: str, params: ModelParams):
    kind, _, rest = spec.partition(":")
    if kind == "jacobi":
        n = int(rest)
        if n < 0:
            raise ValueError("jacobi degree must be non-negative")
        return lambda x: phi_n(n, np.asarray(x), params)
    if kind == "poly":
        coeffs = [float(c) for c in rest.split(",")] if rest else [0.0]
        return lambda x: np.polynomial.polynomial.polyval(np.asarray(x), coeffs)
    if kind == "kernel":
        region, _, lam_text = rest.partition(":")
        pt = _resolve_point(float(lam_text), params)
        if region != pt.region.value:
            raise ValueError(
                f"lambda = {pt.lam} lies in region {pt.region.value!r}, not {region!r}"
            )
        return pt  # evaluated on the grid's stabilized endpoint forms
    raise ValueError(f"unknown function spec {spec!r}; use jacobi:, poly:, or kernel:")


def _resolve_point(lam: float, params: ModelParams):
    pt = classify(lam, params)
    if pt.region is not Region.GENERIC:
        return pt
    for dp in discrete_spectrum(params):
        if abs(dp.lam - lam) < 1e-9:
            return dp
    raise ValueError(f"lambda = {lam} is not in the spectrum")


def _default_lambdas(params: ModelParams) -> list[float]:
    lams = [params.omega2_endpoint - 1.0]
    if params.beta > params.alpha:
        lams.append(0.5 * (params.omega1_endpoint + params.omega2_endpoint))
    lams.extend(pt.lam for pt in discrete_spectrum(params))
    return lams


def cmd_transform(args) -> int:
    params = _validate(args)
    f = _parse_function(args.function, params)
    lams = args.lam if args.lam else _default_lambdas(params)
    x, base, halves = _x_grid(params, args.x_nodes)
    if callable(f):
        fx = np.asarray(f(x), dtype=complex)
    else:  # kernel spec: the plus component on the double band
        fx = np.asarray(_kernel_row(f, halves, params), dtype=complex)
    results = []
    for lam in lams:
        pt = _resolve_point(lam, params)
        row = _kernel_row(pt, halves, params)
        if pt.region is Region.OMEGA2:
            value = [np.sum(base * row * fx), np.sum(base * np.conj(row) * fx)]
        else:
            value = [np.sum(base * row * fx)]
        results.append(
            {
                "lambda": pt.lam,
                "region": pt.region.value,
                "value": [_complex_json(v) for v in value],
            }
        )
    _emit({"config": _config_dict(args), "results": results}, args)
    return 0


def cmd_verify(args) -> int:
    params = _validate(args)
    grid_options = {
        "s_nodes": args.s_nodes,
        "t_nodes": args.t_nodes,
        "x_nodes": args.x_nodes,
        "truncation_s": args.truncation_s,
    }
    results = run_suite(args.suite, params, grid_options)
    rows = []
    failed = False
    for r in results:
        if r.note.startswith("skipped"):
            status = "SKIP"
        elif r.passed:
            status = "PASS"
        else:
            status = "FAIL"
            failed = True
        row = {"check": r.name, "value": r.value, "tolerance": r.tolerance, "status": status}
        if r.note:
            row["note"] = r.note
        rows.append(row)
    _emit({"config": _config_dict(args), "results": rows}, args)
    return 1 if failed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "transform":
            return cmd_transform(args)
        return cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
