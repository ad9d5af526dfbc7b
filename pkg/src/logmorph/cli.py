"""Command-line harness: morph, signal-study, exposure-study, selftest.

Exit codes: 0 on success; 1 on a property or precondition failure
(unreadable input, unsatisfiable save, failed study or selftest); 2 on
a usage error (unknown flags, malformed structuring-function spec).
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import classical, io
from .checks import exposure_scores, run_selftest, signal_contrast_report
from .data import sample_image
from .image import (
    as_grey_image,
    complement,
    exposure_change,
    rescale_for_display,
    two_peak_signal,
)
from .lip import DEFAULT_M
from .logarithmic import log_closing, log_dilation, log_erosion, log_gradient, log_opening
from .structuring import flat_sf, hemisphere_sf

_CLASSICAL_OPS = {
    "erode": classical.erosion,
    "dilate": classical.dilation,
    "open": classical.opening,
    "close": classical.closing,
    "gradient": classical.gradient,
}
_LOG_OPS = {
    "erode": log_erosion,
    "dilate": log_dilation,
    "open": log_opening,
    "close": log_closing,
    "gradient": log_gradient,
}
# noun spellings accepted as synonyms; file naming always uses the canonical verb
_OP_ALIASES = {
    "erosion": "erode",
    "dilation": "dilate",
    "opening": "open",
    "closing": "close",
}
_IMPL_ALIASES = {"iso": "isomorphism"}


def _op_name(token):
    name = _OP_ALIASES.get(token, token)
    if name not in _CLASSICAL_OPS:
        raise argparse.ArgumentTypeError(
            f"unknown operator {token!r} (want one of {', '.join(sorted(_CLASSICAL_OPS))})"
        )
    return name


def _impl_name(token):
    name = _IMPL_ALIASES.get(token, token)
    if name not in ("direct", "isomorphism"):
        raise argparse.ArgumentTypeError(
            f"unknown implementation {token!r} (want direct, isomorphism, or iso)"
        )
    return name


def _parse_sf_spec(spec):
    """Parse 'hemisphere:r=<f>[,a=<f>]' or 'flat:r=<f>' into (shape, params).

    Raises argparse.ArgumentTypeError on any deviation from the grammar,
    which argparse turns into a usage error (exit code 2).
    """
    err = argparse.ArgumentTypeError
    head, sep, tail = spec.partition(":")
    if not sep or head not in ("hemisphere", "flat"):
        raise err(f"bad structuring function spec {spec!r}: want hemisphere:... or flat:...")
    params = {}
    for item in tail.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise err(f"bad structuring function spec {spec!r}: {item!r} is not key=value")
        if key in params:
            raise err(f"bad structuring function spec {spec!r}: duplicate {key!r}")
        try:
            params[key] = float(value)
        except ValueError:
            raise err(f"bad structuring function spec {spec!r}: {value!r} is not a number") from None
    allowed = {"hemisphere": {"r", "a"}, "flat": {"r"}}[head]
    if "r" not in params or not set(params) <= allowed:
        raise err(f"bad structuring function spec {spec!r}: {head} takes {sorted(allowed)}, needs r")
    if params["r"] <= 0 or not np.isfinite(params["r"]):
        raise err(f"bad structuring function spec {spec!r}: r must be a positive finite number")
    if "a" in params and (params["a"] < 0 or not np.isfinite(params["a"])):
        raise err(f"bad structuring function spec {spec!r}: a must be finite and >= 0")
    return head, params


def _build_sf(parsed, mode, m):
    shape, params = parsed
    kind = "logarithmic" if mode == "log" else "additive"
    if shape == "flat":
        return flat_sf(params["r"], kind=kind)
    return hemisphere_sf(params["r"], params.get("a"), kind=kind, m=m)


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not np.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive finite number")
    return value


def _finite_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not np.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not finite")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="logmorph",
        description="Grey-level morphology with a logarithmic (multiplicative) grey scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    morph = sub.add_parser("morph", help="apply one operator to an image file")
    morph.add_argument("input", type=Path, help="input image (.pgm, .png, or .csv signal)")
    morph.add_argument("output", type=Path, nargs="?", default=None,
                       help="output file (default: <stem>_<op>_<mode>.<ext> in --out-dir)")
    morph.add_argument("--op", required=True, type=_op_name,
                       metavar="{erode,dilate,open,close,gradient}")
    morph.add_argument("--mode", choices=("classical", "log"), default="log")
    morph.add_argument("--impl", type=_impl_name, default="isomorphism",
                       metavar="{direct,isomorphism}",
                       help="log-mode computation path (ignored in classical mode)")
    morph.add_argument("--sf", type=_parse_sf_spec, default="hemisphere:r=2",
                       help="structuring function: hemisphere:r=<f>[,a=<f>] or flat:r=<f>")
    morph.add_argument("--M", dest="m", type=_positive_float, default=DEFAULT_M,
                       help="upper bound of the grey scale (default 256)")
    morph.add_argument("--complement", action="store_true",
                       help="complement before and after the operator")
    morph.add_argument("--rescale", action="store_true",
                       help="affinely rescale the result to 0..255 before saving")
    morph.add_argument("--out-dir", type=Path, default=None,
                       help="output directory (default: alongside the input)")

    signal = sub.add_parser("signal-study", help="two-peak signal under both operator families")
    signal.add_argument("--length", type=int, default=512)
    signal.add_argument("--sf", type=_parse_sf_spec, default="hemisphere:r=20,a=64")
    signal.add_argument("--M", dest="m", type=_positive_float, default=DEFAULT_M)
    signal.add_argument("--out-dir", type=Path, default=Path("signal-study"))

    exposure = sub.add_parser("exposure-study", help="gradient stability under underexposure")
    exposure.add_argument("input", type=Path, nargs="?", default=None,
                          help="photograph to study (default: bundled camera image)")
    exposure.add_argument("--c", type=_finite_float, default=192.0,
                          help="exposure-change grey level added in the complemented domain")
    exposure.add_argument("--sf", type=_parse_sf_spec, default="hemisphere:r=2")
    exposure.add_argument("--M", dest="m", type=_positive_float, default=DEFAULT_M)
    exposure.add_argument("--out-dir", type=Path, default=Path("exposure-study"))

    selftest = sub.add_parser("selftest", help="run the seeded property checks")
    selftest.add_argument("--seed", type=int, default=0)
    return parser


def _die(message):
    """Print an error and exit with the precondition-failure code 1."""
    print(message, file=sys.stderr)
    raise SystemExit(1)


def _load_input(path):
    try:
        if path.suffix.lower() == ".csv":
            return io.load_signal_csv(path)
        return io.load_image(path)
    except (OSError, ValueError) as exc:
        _die(f"logmorph: error: cannot read {path}: {exc}")


def _save_result(arr, path):
    if path.suffix.lower() == ".csv":
        io.save_signal_csv(arr, path)
    else:
        io.save_image(arr, path)


def _cmd_morph(args):
    f = _load_input(args.input)
    if args.m != DEFAULT_M and np.max(f) > args.m:
        _die(f"logmorph: error: input exceeds the grey-scale bound M={args.m:g}")
    try:
        b = _build_sf(args.sf, args.mode, args.m)
    except ValueError as exc:
        _die(f"logmorph: error: {exc}")
    work = complement(f, args.m) if args.complement else f
    try:
        if args.mode == "classical":
            out = _CLASSICAL_OPS[args.op](work, b)
        else:
            out = _LOG_OPS[args.op](work, b, args.m, args.impl)
    except ValueError as exc:
        _die(f"logmorph: error: {exc}")
    if args.complement:
        # plain affine flip: operator outputs may lie outside the strict
        # display range that complement() polices on its inputs
        out = args.m - 1.0 - out
    print(f"min={np.min(out):.9g} max={np.max(out):.9g}")
    if args.rescale:
        out = rescale_for_display(out)
    if args.output is not None:
        out_path = args.output
        if out_path.parent != Path():
            out_path.parent.mkdir(parents=True, exist_ok=True)
    else:
        out_dir = args.out_dir if args.out_dir is not None else args.input.parent
        out_dir.mkdir(parents=True, exist_ok=True)
        known = (".pgm", ".png", ".csv")
        suffix = args.input.suffix.lower() if args.input.suffix.lower() in known else ".pgm"
        out_path = out_dir / f"{args.input.stem}_{args.op}_{args.mode}{suffix}"
    try:
        _save_result(out, out_path)
    except ValueError as exc:
        _die(f"logmorph: error: cannot save {out_path}: {exc}")
    print(f"wrote {out_path}")
    return 0


def _cmd_signal_study(args):
    shape, params = args.sf
    if shape == "flat":
        _die("logmorph: error: signal-study wants a hemisphere structuring function")
    radius = params["r"]
    amplitude = params.get("a", radius)
    try:
        f = two_peak_signal(args.length)
        report = signal_contrast_report(args.m, radius, amplitude, args.length)
        b_add = hemisphere_sf(radius, amplitude, kind="additive")
        b_log = hemisphere_sf(radius, amplitude, kind="logarithmic", m=args.m)
    except ValueError as exc:
        _die(f"logmorph: error: {exc}")
    args.out_dir.mkdir(parents=True, exist_ok=True)
    io.save_signal_csv(f, args.out_dir / "signal.csv")
    for name, arr in (
        ("erosion_classical", classical.erosion(f, b_add)),
        ("dilation_classical", classical.dilation(f, b_add)),
        ("opening_classical", classical.opening(f, b_add)),
        ("closing_classical", classical.closing(f, b_add)),
        ("erosion_log", log_erosion(f, b_log, args.m)),
        ("dilation_log", log_dilation(f, b_log, args.m)),
        ("opening_log", log_opening(f, b_log, args.m)),
        ("closing_log", log_closing(f, b_log, args.m)),
    ):
        io.save_signal_csv(arr, args.out_dir / f"signal_{name}.csv")
    for key, value in report.items():
        print(f"{key}={value:.9g}")
    ok = (
        report["classical_dilation_max"] > args.m
        and report["log_dilation_max"] < args.m
        and report["classical_erosion_min"] < 0
        and report["log_erosion_min"] < 0
        and report["opening_gap_high_mean"] > report["opening_gap_low_mean"]
    )
    print(f"signal-study: {'ok' if ok else 'FAILED'} (outputs in {args.out_dir})")
    return 0 if ok else 1


def _cmd_exposure_study(args):
    if args.input is not None:
        f = as_grey_image(_load_input(args.input))
        label = args.input.stem
    else:
        f = sample_image("camera")
        label = "camera"
    shape, params = args.sf
    if shape == "flat":
        _die("logmorph: error: exposure-study wants a hemisphere structuring function")
    if not args.c < args.m:
        _die(f"logmorph: error: --c must lie below M (got {args.c:g})")
    try:
        scores = exposure_scores(f, args.c, args.m, params["r"], params.get("a"))
    except ValueError as exc:
        _die(f"logmorph: error: {exc}")
    args.out_dir.mkdir(parents=True, exist_ok=True)
    g = complement(f, args.m)
    g_dark = exposure_change(g, args.c, args.m)
    b_log = hemisphere_sf(params["r"], params.get("a"), kind="logarithmic", m=args.m)
    b_add = hemisphere_sf(params["r"], params.get("a"), kind="additive")
    # fixed interface: four rescaled gradient images plus one text report
    io.save_image(rescale_for_display(classical.gradient(g, b_add)),
                  args.out_dir / f"{label}_gradient_classical.png")
    io.save_image(rescale_for_display(classical.gradient(g_dark, b_add)),
                  args.out_dir / f"{label}_dark_gradient_classical.png")
    io.save_image(rescale_for_display(log_gradient(g, b_log, args.m)),
                  args.out_dir / f"{label}_gradient_log.png")
    io.save_image(rescale_for_display(log_gradient(g_dark, b_log, args.m)),
                  args.out_dir / f"{label}_dark_gradient_log.png")
    # non-strict: c=0 legitimately ties both scores at 1
    ok = scores["log"] >= scores["classical"]
    report_lines = [
        f"input={label}",
        f"c={args.c:.9g}",
        f"M={args.m:.9g}",
        f"sf=hemisphere:r={params['r']:.9g},a={params.get('a', params['r']):.9g}",
        f"score_log={scores['log']:.9g}",
        f"score_classical={scores['classical']:.9g}",
        f"result={'ok' if ok else 'FAILED'}",
    ]
    (args.out_dir / f"{label}_report.txt").write_text("\n".join(report_lines) + "\n")
    print(f"score_log={scores['log']:.9g}")
    print(f"score_classical={scores['classical']:.9g}")
    print(f"exposure-study: {'ok' if ok else 'FAILED'} (outputs in {args.out_dir})")
    return 0 if ok else 1


def _cmd_selftest(args):
    results = run_selftest(args.seed)
    failed = 0
    for res in results:
        status = "ok" if res.passed else "FAILED"
        print(f"{status:6s} {res.name}: {res.detail}")
        failed += not res.passed
    print(f"selftest: {len(results) - failed}/{len(results)} checks passed (seed {args.seed})")
    return 0 if failed == 0 else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "morph": _cmd_morph,
        "signal-study": _cmd_signal_study,
        "exposure-study": _cmd_exposure_study,
        "selftest": _cmd_selftest,
    }
    return handlers[args.command](args)


def entry():  # console-script shim
    sys.exit(main())


if __name__ == "__main__":
    entry()
