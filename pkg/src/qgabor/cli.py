"""Command-line front end.

Exit codes: 0 on success/pass, 1 when a verification check fails its
tolerance, 2 on usage or I/O errors.  Verification subcommands print a flat
key = value report (and write it to --report when given); the verdict always
equals the underlying library check, the CLI adds no numerics of its own.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import gqft as gq
from . import oracles, qsig_io, signals, uncertainty
from ._kernels import backend
from .errors import QGaborError
from .grid import GridSpec, QSignal2D, l2_norm_sq, sample, translate_circular
from .qft import dqft, idqft, spatial_grid
from .quat import Quaternion

_USAGE_ERROR = 2
_CHECK_FAILED = 1


def _parse_pair(text: str, cast=float) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}")
    return (cast(parts[0]), cast(parts[1]))


def _signal_grid(n: int, extent: float) -> GridSpec:
    h = 2.0 * extent / n
    return GridSpec(n, n, h, h, centered=True)


def _load_signal(spec_text: str, n: int, scheme: str) -> QSignal2D:
    if spec_text.startswith("file:"):
        return qsig_io.read_qsig(spec_text[5:])
    if spec_text.startswith("gaussian:"):
        a = float(spec_text.split(":", 1)[1])
        if not a > 0:
            raise ValueError("gaussian signal needs a > 0")
        # deriv needs the finer spacing for the central-difference bound
        extent = (4.0 if scheme == "deriv" else 5.0) / math.sqrt(a)
        return sample(signals.gaussian(a), _signal_grid(n, extent))
    raise ValueError(f"unknown signal spec {spec_text!r} "
                     f"(use gaussian:<a> or file:<path>)")


def _build_window(spec_text: str, grid: GridSpec) -> gq.Window:
    if spec_text == "box":
        return gq.make_window("box", grid)
    if spec_text == "haar":
        return gq.make_window("haar", grid)
    if spec_text.startswith("gaussian:"):
        sigma = float(spec_text.split(":", 1)[1])
        return gq.make_window("gaussian", grid, sigma=sigma)
    if spec_text.startswith("file:"):
        return gq.make_window("custom", grid, samples=qsig_io.read_qsig(spec_text[5:]))
    raise ValueError(f"unknown window spec {spec_text!r} "
                     f"(use box, haar, gaussian:<sigma> or file:<path>)")


def _emit_report(entries: dict, path: str | None) -> None:
    text = qsig_io.format_report(entries)
    sys.stdout.write(text)
    if path:
        Path(path).write_text(text)


# ---------------------------------------------------------------- commands


def _cmd_qft(args) -> int:
    method = "brute" if args.brute else "fast"
    if args.direction == "fwd":
        f = qsig_io.read_qsig(args.infile)
        qsig_io.write_qsig(args.outfile, dqft(f, method=method))
    else:
        spectrum = qsig_io.read_qspec(args.infile)
        qsig_io.write_qsig(args.outfile, idqft(spectrum, method=method))
    return 0


def _cmd_gqft(args) -> int:
    f = qsig_io.read_qsig(args.infile)
    window = _build_window(args.window, f.spec)
    did_something = False

    if args.spectrogram:
        if args.b is None:
            raise ValueError("--spectrogram needs --b i,j")
        slice_ = gq.gqft_slice(f, window, args.b)
        power = np.einsum("ijc,ijc->ij", slice_.data, slice_.data)
        qsig_io.export_heatmap(power, args.spectrogram)
        did_something = True

    if args.out_dir:
        g = gq.gqft_full(f, window, budget=args.budget)
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for b1 in range(f.spec.n1):
            for b2 in range(f.spec.n2):
                qsig_io.write_qsig(out / f"b_{b1}_{b2}.qsig", g.slice_at((b1, b2)))
        manifest = {
            "window": window.label(),
            "c_phi": window.energy,
            "n1": f.spec.n1,
            "n2": f.spec.n2,
            "h1": f.spec.h1,
            "h2": f.spec.h2,
            "centered": 1 if f.spec.centered else 0,
        }
        (out / "manifest.txt").write_text(qsig_io.format_report(manifest))
        did_something = True

    if not did_something:
        raise ValueError("gqft: nothing to do; pass --spectrogram and/or --out-dir")
    return 0


def _cmd_reconstruct(args) -> int:
    indir = Path(args.in_gqft_dir)
    manifest = qsig_io.parse_report((indir / "manifest.txt").read_text())
    n1, n2 = int(manifest["n1"]), int(manifest["n2"])

    slices = np.empty((n1, n2, n1, n2, 4))
    spec_w = None
    for b1 in range(n1):
        for b2 in range(n2):
            spectrum = qsig_io.read_qspec(indir / f"b_{b1}_{b2}.qsig")
            slices[b1, b2] = spectrum.data
            spec_w = spectrum.spec
    spec_b = spatial_grid(spec_w)

    window = _build_window(args.window, spec_b)
    c_phi = float(manifest["c_phi"])
    if abs(window.energy - c_phi) > 1e-9 * max(c_phi, window.energy):
        raise ValueError(
            f"--window energy {window.energy} does not match the manifest "
            f"c_phi {c_phi}; wrong window for this transform directory"
        )
    g = gq.GaborTransform(spec_b, spec_w, slices, window.energy)
    qsig_io.write_qsig(args.outfile, gq.reconstruct(g, window))
    return 0


_VERIFY_DEFAULT_N = {
    "plancherel": 16,
    "inversion": 16,
    "shift": 8,
    "reflect": 8,
    "heisenberg": 128,
    "log": 64,
    "deriv": 512,
}


def _cmd_verify(args) -> int:
    scheme = args.scheme
    n = args.n or _VERIFY_DEFAULT_N[scheme]
    f = _load_signal(args.signal, n, scheme)

    entries: dict = {
        "scheme": scheme,
        "backend": backend(),
        "n1": f.spec.n1,
        "n2": f.spec.n2,
        "h1": f.spec.h1,
        "h2": f.spec.h2,
        "centered": 1 if f.spec.centered else 0,
    }
    ok = True

    if scheme == "plancherel":
        window = _build_window(args.window, f.spec)
        g = gq.gqft_full(f, window)
        target = l2_norm_sq(f) * window.energy
        rel = abs(g.total_energy() / target - 1.0)
        entries.update(total_energy=g.total_energy(), target=target,
                       rel_error=rel, tolerance=1e-12)
        ok = rel < 1e-12

    elif scheme == "inversion":
        round_trip = idqft(dqft(f))
        qft_err = float(np.max(np.abs(round_trip.data - f.data)))
        window = _build_window(args.window, f.spec)
        rec = gq.reconstruct(gq.gqft_full(f, window), window)
        gqft_err = float(np.max(np.abs(rec.data - f.data)))
        entries.update(qft_round_trip_error=qft_err, qft_tolerance=1e-11,
                       gqft_reconstruction_error=gqft_err, gqft_tolerance=1e-10)
        ok = qft_err < 1e-11 and gqft_err < 1e-10

    elif scheme == "shift":
        window = _build_window(args.window, f.spec)
        dev = gq.shift_covariance_check(f, window, args.shift)
        entries.update(shift=f"{args.shift[0]},{args.shift[1]}",
                       max_deviation=dev, tolerance=1e-11)
        ok = dev < 1e-11

    elif scheme == "reflect":
        window = _build_window(args.window, f.spec)
        dev = gq.reflection_check(f, window)
        entries.update(max_deviation=dev, tolerance=1e-11)
        ok = dev < 1e-11

    elif scheme == "heisenberg":
        report = uncertainty.heisenberg_qft(f, args.axis)
        entries.update(axis=report.axis, lhs=report.lhs, rhs=report.rhs,
                       ratio=report.ratio, min_ratio=0.99)
        ok = report.ratio >= 0.99
        if args.window:
            window = _build_window(args.window, f.spec)
            grep = uncertainty.heisenberg_gqft(f, window, args.axis)
            entries.update(gqft_lhs=grep.lhs, gqft_rhs=grep.rhs,
                           gqft_ratio=grep.ratio)
            ok = ok and grep.ratio >= 0.99

    elif scheme == "log":
        report = uncertainty.log_qft(f, t=args.t)
        entries.update(t=report.t, D=report.D, lhs=report.lhs,
                       rhs=report.rhs, slack=report.slack)
        ok = report.slack >= 0.0
        if args.window:
            window = _build_window(args.window, f.spec)
            grep = uncertainty.log_gqft(f, window, t=args.t)
            entries.update(gqft_lhs=grep.lhs, gqft_rhs=grep.rhs,
                           gqft_slack=grep.slack)
            ok = ok and grep.slack >= 0.0

    elif scheme == "deriv":
        if not args.signal.startswith("gaussian:"):
            raise ValueError("verify deriv supports gaussian:<a> signals only "
                             "(needs the analytic derivative)")
        a = float(args.signal.split(":", 1)[1])
        exact = sample(signals.gaussian_dx(a, args.axis), f.spec)
        analytic = uncertainty.derivative_identity_check(f, args.axis, derivative=exact)
        central = uncertainty.derivative_identity_check(f, args.axis)
        entries.update(axis=args.axis,
                       analytic_rel_gap=analytic.rel_gap, analytic_tolerance=1e-8,
                       central_rel_gap=central.rel_gap, central_tolerance=1e-3)
        ok = analytic.rel_gap < 1e-8 and central.rel_gap < 1e-3

    entries["verdict"] = "pass" if ok else "fail"
    _emit_report(entries, args.report)
    return 0 if ok else _CHECK_FAILED


_QUAD_RES = {"example1": 400, "example2": 200}


def _oracle_quadrature(which: str, omega, b) -> Quaternion:
    res = _QUAD_RES[which]
    if which == "example1":
        lo = (max(0.0, b[0] - 1.0), max(0.0, b[1] - 1.0))
        hi = (1.0 + b[0], 1.0 + b[1])
        if hi[0] <= lo[0] or hi[1] <= lo[1]:
            return Quaternion()
        dom = oracles.QuadratureDomain(lo, hi, res)

        def f_fn(x1, x2):
            return signals.real_field(np.exp(-np.broadcast_to(x1 + x2, np.broadcast(x1, x2).shape)))

        return oracles.gqft_quadrature(f_fn, signals.constant_one(), omega, b,
                                       dom, require_decay=False)

    f_fn = signals.unit_gaussian()
    one = signals.constant_one()
    dom1 = oracles.QuadratureDomain((b[0], b[1]), (b[0] + 0.5, b[1] + 0.5), res)
    dom2 = oracles.QuadratureDomain((b[0] + 0.5, b[1] + 0.5),
                                    (b[0] + 1.0, b[1] + 1.0), res)
    q1 = oracles.gqft_quadrature(f_fn, one, omega, b, dom1, require_decay=False)
    q2 = oracles.gqft_quadrature(f_fn, one, omega, b, dom2, require_decay=False)
    return q1 - q2


def oracle_agreement(p: Quaternion, q: Quaternion, tol: float = 1e-6) -> bool:
    scale = max(p.norm(), q.norm())
    return (p - q).norm() <= tol * scale or scale < 1e-12


def _cmd_oracle(args) -> int:
    closed = (oracles.example1_closed if args.which == "example1"
              else oracles.example2_closed)(args.omega, args.b)
    print(f"value = {closed.w!r} {closed.x!r}i {closed.y!r}j {closed.z!r}k")
    print(f"modulus = {closed.norm()!r}")
    if not args.compare_quadrature:
        return 0
    quad = _oracle_quadrature(args.which, args.omega, args.b)
    diff = (closed - quad).norm()
    agree = oracle_agreement(closed, quad)
    print(f"quadrature_modulus = {quad.norm()!r}")
    print(f"abs_difference = {diff!r}")
    print(f"agreement = {'yes' if agree else 'no'}")
    return 0 if agree else _CHECK_FAILED


def _cmd_ingest(args) -> int:
    qsig_io.write_qsig(args.outfile, qsig_io.ingest_ppm(args.ppm))
    return 0


# ------------------------------------------------------------------ parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgabor",
        description="Two-sided quaternion Fourier/Gabor transforms and "
                    "uncertainty verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qft", help="forward or inverse transform of a .qsig file")
    p.add_argument("direction", choices=["fwd", "inv"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true",
                      help="direct summation instead of the fast path")
    mode.add_argument("--fast", action="store_true", help="(default)")
    p.set_defaults(func=_cmd_qft)

    p = sub.add_parser("gqft", help="windowed transform: spectrogram slice "
                                    "and/or full per-shift directory")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--window", required=True,
                   help="box | haar | gaussian:<sigma> | file:<path>")
    p.add_argument("--b", type=lambda s: _parse_pair(s, int), default=None,
                   help="shift indices i,j for --spectrogram")
    p.add_argument("--spectrogram", help="write |G(omega, b)|^2 as a PGM")
    p.add_argument("--out-dir", help="write every slice as b_<i>_<j>.qsig "
                                     "plus manifest.txt")
    p.add_argument("--budget", type=int, default=gq.DEFAULT_SHIFT_BUDGET)
    p.set_defaults(func=_cmd_gqft)

    p = sub.add_parser("reconstruct", help="invert a gqft directory")
    p.add_argument("--in-gqft-dir", dest="in_gqft_dir", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="run a library identity/inequality check")
    p.add_argument("scheme", choices=["plancherel", "inversion", "shift",
                                      "reflect", "heisenberg", "log", "deriv"])
    p.add_argument("--signal", default="gaussian:1",
                   help="gaussian:<a> | file:<path> (default gaussian:1)")
    p.add_argument("--window", default="gaussian:1",
                   help="window for the windowed checks; for heisenberg/log "
                        "the windowed variant runs only when given explicitly")
    p.add_argument("--n", type=int, default=None,
                   help="grid size per axis (scheme-specific default)")
    p.add_argument("--t", type=float, default=uncertainty.DEFAULT_T,
                   help="digamma argument for the log bound")
    p.add_argument("--axis", type=int, choices=[1, 2], default=1)
    p.add_argument("--shift", type=lambda s: _parse_pair(s, int), default=(1, 2),
                   help="shift i,j for the shift identity")
    p.add_argument("--report", help="also write the report to this path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="evaluate a closed-form worked case")
    p.add_argument("which", choices=["example1", "example2"])
    p.add_argument("--omega", type=_parse_pair, required=True)
    p.add_argument("--b", type=_parse_pair, required=True)
    p.add_argument("--compare-quadrature", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("ingest", help="convert a binary P6 PPM to .qsig")
    p.add_argument("--ppm", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_ingest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    # heisenberg/log run their windowed variant only on an explicit --window
    if args.command == "verify" and args.scheme in ("heisenberg", "log"):
        given = argv if argv is not None else sys.argv[1:]
        if "--window" not in given:
            args.window = None
    try:
        return args.func(args)
    except (QGaborError, OSError, ValueError) as exc:
        print(f"qgabor: error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
