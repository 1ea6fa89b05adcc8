"""Command-line interface.

Every subcommand reads one signal (two for ``compare``), runs one analysis
and writes a report to standard output: JSON by default, CSV for histogram
and entropy payloads when ``--format csv`` is given. Failures are written to
standard error as a JSON object ``{"error": {"type": ..., "message": ...}}``;
exit status is 1 for bad input and 2 for computation errors.
"""
import argparse
import csv
import io
import json
import sys

from . import __version__
from .analysis import (bhattacharyya, config_histogram, semantic_entropy,
                       semantic_information, sliding_entropy)
from .automaton import dfa_accept
from .encoder import symbolize
from .errors import ComputationError, InputError
from .io import Report, input_descriptor, read_signal
from .resampler import BREAK_SYMBOLS, resample_study
from .signal import shuffle_surrogate
from .transducer import DetectorConfig, detect_spikes

CSV_COMMANDS = {"histogram", "entropy"}


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _hist_payload(hist):
    return {
        "total": hist.total,
        "counts": [int(c) for c in hist.counts],
        "densities": [float(p) for p in hist.densities],
        "semantic_entropy": semantic_entropy(hist),
    }


def _load(args, path=None):
    path = path or args.input
    return path, read_signal(path, rate_hz=args.rate, column=args.column)


def cmd_symbolize(args):
    path, sig = _load(args)
    return Report("symbolize", [input_descriptor(path, sig)],
                  {"symbols": [int(s) for s in symbolize(sig, args.epsilon)]})


def cmd_accept(args):
    path, sig = _load(args)
    res = dfa_accept(symbolize(sig, args.epsilon))
    return Report("accept", [input_descriptor(path, sig)], {
        "accepted": res.accepted,
        "final_state": str(res.final_state),
        "trace": [str(q) for q in res.trace],
        "rejection_index": res.rejection_index,
    })


def cmd_histogram(args):
    path, sig = _load(args)
    hist = config_histogram(symbolize(sig, args.epsilon))
    return Report("histogram", [input_descriptor(path, sig)], _hist_payload(hist))


def cmd_entropy(args):
    path, sig = _load(args)
    rate = sig.sample_rate_hz
    window = args.window if args.window is not None else int(round(2.0 * rate))
    hop = args.hop if args.hop is not None else max(1, int(round(0.25 * rate)))
    series = sliding_entropy(sig, window, hop, args.epsilon)
    return Report("entropy", [input_descriptor(path, sig)], {
        "window_len": series.window_len,
        "hop": series.hop,
        "start_indices": list(series.start_indices),
        "values": list(series.values),
    })


def cmd_spikes(args):
    path, sig = _load(args)
    cfg = DetectorConfig(threshold=args.threshold, tolerance=args.tolerance,
                         max_duration_s=args.max_duration, epsilon=args.epsilon,
                         step=args.step)
    events = detect_spikes(sig, cfg)
    return Report("spikes", [input_descriptor(path, sig)], {
        "config": {"threshold": cfg.threshold, "tolerance": cfg.tolerance,
                   "max_duration_s": cfg.max_duration_s, "step": cfg.step},
        "events": [
            {"onset_index": e.onset_index, "peak_index": e.peak_index,
             "trough_index": e.trough_index, "offset_index": e.offset_index,
             "w1": e.w1, "w2": e.w2, "w3": e.w3, "residual": e.residual,
             "duration_s": e.duration_s}
            for e in events
        ],
    })


def cmd_compare(args):
    path_a, sig_a = _load(args)
    path_b, sig_b = _load(args, args.other)
    ha = config_histogram(symbolize(sig_a, args.epsilon))
    hb = config_histogram(symbolize(sig_b, args.epsilon))
    dist = bhattacharyya(ha, hb)
    disjoint = dist == float("inf")
    return Report("compare", [input_descriptor(path_a, sig_a), input_descriptor(path_b, sig_b)], {
        "bhattacharyya": None if disjoint else dist,
        "disjoint_support": disjoint,
        "first": _hist_payload(ha),
        "second": _hist_payload(hb),
    })


def _rates(text):
    try:
        rates = [float(r) for r in text.split(",") if r.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad rate list: {text!r}") from None
    if not rates or any(r <= 0 for r in rates):
        raise argparse.ArgumentTypeError("rates must be positive")
    return rates


def cmd_resample_study(args):
    path, sig = _load(args)
    study = resample_study(sig, args.rates, args.epsilon)
    rows = []
    for rate, hist in study.items():
        row = {"rate_hz": rate, "length": hist.total + 2}
        row.update(_hist_payload(hist))
        row["break_fraction"] = float(sum(hist.p(s) for s in sorted(BREAK_SYMBOLS)))
        rows.append(row)
    return Report("resample-study", [input_descriptor(path, sig)], {"rates": rows})


def cmd_surrogate(args):
    path, sig = _load(args)
    sur = shuffle_surrogate(sig, args.seed)
    payload = {"seed": args.seed, "samples": [float(v) for v in sur.samples]}
    if len(sig) >= 3:
        payload["original"] = _hist_payload(config_histogram(symbolize(sig, args.epsilon)))
        payload["surrogate"] = _hist_payload(config_histogram(symbolize(sur, args.epsilon)))
    return Report("surrogate", [input_descriptor(path, sig)], payload)


def cmd_info(args):
    path, sig = _load(args)
    start = args.start
    end = len(sig) if args.end is None else args.end
    value = semantic_information(sig, start, end, args.mode)
    return Report("info", [input_descriptor(path, sig)],
                  {"start_index": start, "end_index": end, "mode": args.mode,
                   "semantic_information": value})


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--rate", type=float, help="sample rate in Hz (required for CSV)")
    common.add_argument("--column", type=int, default=0, help="CSV column, 0-based")
    common.add_argument("--epsilon", type=float, default=0.0,
                        help="differences with |d| <= epsilon count as zero")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = _Parser(prog="semsig",
                     description="Shape-configuration analysis of 1-D signals.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("input")
        p.set_defaults(func=func)
        return p

    add("symbolize", cmd_symbolize, "configuration string")
    add("accept", cmd_accept, "run the DFA on the configuration string")
    add("histogram", cmd_histogram, "configuration histogram and semantic entropy")
    p = add("entropy", cmd_entropy, "sliding-window semantic entropy")
    p.add_argument("--window", type=int, help="window length in samples (default 2 s)")
    p.add_argument("--hop", type=int, help="hop in samples (default 0.25 s)")
    p = add("spikes", cmd_spikes, "weighted-transducer spike detection")
    p.add_argument("--threshold", type=float, required=True)
    p.add_argument("--tolerance", type=float, default=0.02)
    p.add_argument("--max-duration", type=float, default=0.01, help="seconds")
    p.add_argument("--step", type=float, default=1.0,
                   help="horizontal run per sample in the weight angle; raise it "
                        "when per-sample increments are not small")
    p = add("compare", cmd_compare, "Bhattacharyya distance between two signals")
    p.add_argument("other")
    p = add("resample-study", cmd_resample_study, "histograms after spline resampling")
    p.add_argument("--rates", type=_rates, required=True, help="comma-separated Hz")
    p = add("surrogate", cmd_surrogate, "shuffle surrogate")
    p.add_argument("--seed", type=int, default=0)
    p = add("info", cmd_info, "total semantic information over a sample range")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--end", type=int)
    p.add_argument("--mode", choices=("raw", "analog"), default="raw")
    return parser


def report_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    p = report.payload
    if report.command == "histogram":
        w.writerow(["symbol", "count", "density"])
        for i, (c, d) in enumerate(zip(p["counts"], p["densities"]), start=1):
            w.writerow([i, c, repr(d)])
    else:
        w.writerow(["start_index", "semantic_entropy"])
        for i, v in zip(p["start_indices"], p["values"]):
            w.writerow([i, repr(v)])
    return buf.getvalue()


def _error(exc, kind):
    body = {"type": type(exc).__name__, "kind": kind, "message": str(exc)}
    if hasattr(exc, "details"):
        body.update(exc.details())
    return json.dumps({"error": body})


def run_cli(argv=None, stdout=None, stderr=None):
    """Run one command; returns the process exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.format == "csv" and args.command not in CSV_COMMANDS:
            raise UsageError(f"--format csv is only available for {sorted(CSV_COMMANDS)}")
        report = args.func(args)
    except ComputationError as exc:
        print(_error(exc, "computation"), file=stderr)
        return 2
    except (InputError, OSError, ValueError) as exc:
        print(_error(exc, "input"), file=stderr)
        return 1
    stdout.write(report_csv(report) if args.format == "csv" else report.to_json())
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
