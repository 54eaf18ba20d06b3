"""Command-line interface: generate benchmark data, fit graphs, check result bundles.

A fit produces a result bundle directory:

    centroids.csv    one fitted centroid per row
    edges.json       list of {"u", "v", "weight"} with u < v
    assignments.csv  N x K soft assignment matrix
    trace.json       objective per iteration, parameters, convergence flag
    plot.svg         rendered overlay of data, centroids and edges (2-D data)

All numbers are written with 17 significant digits and every file is
byte-stable for a fixed seed and flag set.

Exit codes: 0 on success, 1 on usage errors (bad flags, unreadable input),
2 on solver failures or a bundle that fails validation.
"""

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .datasets import (
    DATASET_NAMES,
    gen_dataset,
    heat_kernel_features,
    pca_reduce,
    standardize,
)
from .fitting import fit, fit_landmarks
from .model import L1_GRAPH, SPANNING_TREE, FitParams
from .plotting import render_fit_svg
from .simplex import LpError
from .spanning_tree import validate_tree

_STRUCTURES = {"tree": SPANNING_TREE, "l1": L1_GRAPH}
_BUNDLE_FILES = ("centroids.csv", "edges.json", "assignments.csv", "trace.json")


def _write_matrix(path, M):
    np.savetxt(path, np.asarray(M, dtype=float), delimiter=",", fmt="%.17g")


def _write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _read_points(path):
    """Load a points-per-row CSV as a D x N matrix."""
    X = np.loadtxt(path, delimiter=",", ndmin=2)
    if X.size == 0:
        raise ValueError(f"{path}: no data rows")
    return X.T


def _cmd_gen(args):
    try:
        X, labels = gen_dataset(args.name, args.n, args.noise, args.seed)
        skeleton, _ = gen_dataset(args.name, args.n, 0.0, args.seed)
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write_matrix(out / f"{args.name}.csv", X.T)
    _write_json(
        out / f"{args.name}.truth.json",
        {
            "name": args.name,
            "n": int(X.shape[1]),
            "noise": args.noise,
            "seed": args.seed,
            "labels": [int(v) for v in labels],
            "skeleton": [[float(a) for a in p] for p in skeleton.T],
        },
    )
    return 0


def _cmd_fit(args):
    try:
        X = _read_points(args.input)
        if args.standardize:
            X = standardize(X)
        if args.kernel:
            X = heat_kernel_features(X)
        if args.pca_energy is not None:
            X = pca_reduce(X, args.pca_energy)
        params = FitParams(
            sigma=args.sigma,
            gamma=args.gamma,
            lam=args.lam,
            nn=args.nn,
            tol=args.tol,
            max_iters=args.max_iters,
            structure=_STRUCTURES[args.structure],
            seed=args.seed,
        )
        if args.landmarks is not None and not 2 <= args.landmarks <= X.shape[1]:
            raise ValueError(f"--landmarks must be in [2, {X.shape[1]}]")
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.landmarks is not None:
            result = fit_landmarks(X, params, args.landmarks)
        else:
            result = fit(X, params)
    except (ValueError, LpError, np.linalg.LinAlgError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2

    W = result.weights
    edges = [
        {"u": int(i), "v": int(j), "weight": float(W[i, j])}
        for i, j in zip(*np.nonzero(np.triu(W, k=1)))
    ]
    _write_matrix(out / "centroids.csv", result.centroids.T)
    _write_matrix(out / "assignments.csv", result.assignments)
    _write_json(out / "edges.json", edges)
    _write_json(
        out / "trace.json",
        {
            "converged": result.converged,
            "iterations": result.iterations,
            "objective": list(result.objective_trace),
            "params": {**asdict(params), "landmarks": args.landmarks},
            "shape": {
                "n_dims": int(X.shape[0]),
                "n_points": int(X.shape[1]),
                "n_centroids": int(result.centroids.shape[1]),
            },
        },
    )
    if X.shape[0] == 2:
        render_fit_svg(out / "plot.svg", X, result.centroids, W)
    return 0


def _check_bundle(bundle):
    """Yield failure messages for an on-disk result bundle."""
    trace = json.loads((bundle / "trace.json").read_text())
    C = np.loadtxt(bundle / "centroids.csv", delimiter=",", ndmin=2)
    P = np.loadtxt(bundle / "assignments.csv", delimiter=",", ndmin=2)
    edges = json.loads((bundle / "edges.json").read_text())
    K = C.shape[0]

    W = np.zeros((K, K))
    for e in edges:
        u, v, w = e["u"], e["v"], e["weight"]
        if not (0 <= u < v < K):
            yield f"edge ({u}, {v}) out of range for {K} centroids"
            return
        if w < 0:
            yield f"edge ({u}, {v}) has negative weight {w}"
        W[u, v] = W[v, u] = w

    if P.shape[1] != K:
        yield f"assignments have {P.shape[1]} columns, expected {K}"
    if (P < 0).any():
        yield "assignments contain negative entries"
    bad = np.abs(P.sum(axis=1) - 1.0) > 1e-9
    if bad.any():
        yield f"{int(bad.sum())} assignment rows do not sum to 1"

    structure = trace["params"]["structure"]
    if structure == SPANNING_TREE:
        if not validate_tree(W):
            yield "edge list is not a spanning tree"
        obj = trace["objective"]
        for t in range(len(obj) - 1):
            if obj[t + 1] > obj[t] + 1e-9 * abs(obj[t]):
                yield f"objective rises at iteration {t + 1}"
                break

    if trace["converged"] and len(trace["objective"]) >= 2:
        a, b = trace["objective"][-2:]
        if abs(b - a) / max(abs(a), 1e-12) >= trace["params"]["tol"]:
            yield "converged flag set but final change exceeds tol"


def _cmd_check(args):
    bundle = Path(args.bundle)
    missing = [f for f in _BUNDLE_FILES if not (bundle / f).exists()]
    if missing:
        print(f"error: {bundle} is missing {', '.join(missing)}", file=sys.stderr)
        return 1
    try:
        failures = list(_check_bundle(bundle))
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: unreadable bundle: {exc}", file=sys.stderr)
        return 1
    if failures:
        for msg in failures:
            print(f"check failed: {msg}", file=sys.stderr)
        return 2
    print(f"ok: {bundle}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="princigraph",
        description="Fit explicit tree or sparse-graph skeletons to point clouds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a synthetic dataset CSV plus ground truth")
    gen.add_argument("--name", required=True, choices=DATASET_NAMES)
    gen.add_argument("--n", type=int, default=None, help="points (default: per-shape size)")
    gen.add_argument("--noise", type=float, default=0.05)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output-dir", default=".")
    gen.set_defaults(func=_cmd_gen)

    fit_p = sub.add_parser("fit", help="fit a graph and write a result bundle")
    fit_p.add_argument("--input", required=True, help="CSV with one point per row")
    fit_p.add_argument("--structure", choices=sorted(_STRUCTURES), default="tree")
    fit_p.add_argument("--sigma", type=float, default=0.01)
    fit_p.add_argument("--gamma", type=float, default=0.5)
    fit_p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    fit_p.add_argument("--nn", type=int, default=5)
    fit_p.add_argument("--landmarks", type=int, default=None, metavar="K")
    fit_p.add_argument("--tol", type=float, default=1e-5)
    fit_p.add_argument("--max-iters", type=int, default=100)
    fit_p.add_argument("--seed", type=int, default=0)
    fit_p.add_argument("--standardize", action="store_true")
    fit_p.add_argument("--kernel", action="store_true", help="heat-kernel features")
    fit_p.add_argument("--pca-energy", type=float, default=None)
    fit_p.add_argument("--output-dir", default=".")
    fit_p.set_defaults(func=_cmd_fit)

    check = sub.add_parser("check", help="re-validate a result bundle")
    check.add_argument("bundle")
    check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
