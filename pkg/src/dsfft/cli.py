"""Command-line surface: transform sample files, emit twiddle ROMs, run
verification suites, and benchmark the two butterfly backends.

Exit codes are a stable contract: 0 success, 1 input data error (message
names the offending line or byte offset), 2 usage error, 3 verification
failure.

Sample files are either text (one "re im" pair of decimals per line) or
raw (interleaved little-endian signed 16-bit words re, im). Text output
prints six decimal places; raw is the bit-exact interchange format.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import statistics
import struct
import sys
import time
from pathlib import Path

from .butterfly import DatapathConfig, OpCounts, ScalingMode, mul_slicing_raw
from .engine import Backend, Signal, fft, fft_both_backends, plan, random_signal
from .fixedpoint import ComplexFixed, Fixed16, OverflowMode, RoundingMode, mul_raw
from .oracle import ErrorReport, compare, dft_reference
from .slicing import (
    ODD_RAW_MAX,
    ODD_RAW_MIN,
    SliceParams,
    reassemble,
    reassemble_odd,
    slice_odd,
    slice_word,
)
from .twiddle import Twiddle, is_power_of_two, make_block_tables, make_rom, rom_to_hex

VERIFY_SEED = 0x51D5
BENCH_SEED = 0xBE7C


class InputError(Exception):
    """Malformed input data; rendered to stderr and mapped to exit 1."""


class UsageError(Exception):
    """Invalid flag combination; rendered to stderr and mapped to exit 2."""


# ---------------------------------------------------------------------------
# Sample file I/O
# ---------------------------------------------------------------------------

def read_samples_text(path: Path) -> list[ComplexFixed]:
    try:
        lines = path.read_text().splitlines()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    out: list[ComplexFixed] = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(
                f"{path}: line {lineno}: expected two values, got {len(parts)}")
        try:
            re, im = float(parts[0]), float(parts[1])
            out.append(ComplexFixed(Fixed16.from_real(re), Fixed16.from_real(im)))
        except ValueError as e:
            raise InputError(f"{path}: line {lineno}: {e}") from e
    return out


def read_samples_raw(path: Path) -> list[ComplexFixed]:
    try:
        data = path.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    if len(data) % 4 != 0:
        raise InputError(
            f"{path}: truncated sample at byte offset {len(data) - len(data) % 4}")
    words = struct.unpack(f"<{len(data) // 2}h", data)
    return [ComplexFixed(Fixed16(words[i]), Fixed16(words[i + 1]))
            for i in range(0, len(words), 2)]


def write_samples_text(path: Path, values) -> None:
    path.write_text("".join(
        f"{v.re.to_real():.6f} {v.im.to_real():.6f}\n" for v in values))


def write_samples_raw(path: Path, values) -> None:
    words: list[int] = []
    for v in values:
        words.append(v.re.raw)
        words.append(v.im.raw)
    path.write_bytes(struct.pack(f"<{len(words)}h", *words))


def read_samples(path: Path, fmt: str) -> list[ComplexFixed]:
    return read_samples_text(path) if fmt == "text" else read_samples_raw(path)


def write_samples(path: Path, fmt: str, values) -> None:
    if fmt == "text":
        write_samples_text(path, values)
    else:
        write_samples_raw(path, values)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def run_report(backend: Backend, n: int, cfg: DatapathConfig, timing_ns: int,
               counts: OpCounts, error: ErrorReport | None = None) -> dict:
    return {
        "config": {
            "backend": backend.value,
            "n": n,
            "rounding": cfg.rounding.value,
            "overflow": cfg.overflow.value,
            "scaling": cfg.scaling.value,
            "b": cfg.slice_params.b,
            "p": cfg.slice_params.p,
        },
        "timing_ns": timing_ns,
        "op_counts": counts.as_dict(),
        "error": error.as_dict() if error is not None else None,
    }


def _config_from_args(args) -> DatapathConfig:
    try:
        params = SliceParams(b=args.blocks, p=args.width)
        params.check_even()
    except ValueError as e:
        raise UsageError(str(e)) from e
    rounding = (RoundingMode.NEAREST_HALF_UP if args.rounding == "nearest"
                else RoundingMode.TRUNCATE)
    scaling = (ScalingMode.HALF_PER_STAGE if args.scaling == "half"
               else ScalingMode.NONE)
    return DatapathConfig(rounding=rounding, overflow=OverflowMode.SATURATE,
                          scaling=scaling, slice_params=params)


# ---------------------------------------------------------------------------
# fft subcommand
# ---------------------------------------------------------------------------

# Above this size the O(N^2) oracle comparison is skipped in reports.
ORACLE_LIMIT = 4096


def cmd_fft(args) -> int:
    cfg = _config_from_args(args)
    backend = Backend.CONVENTIONAL if args.backend == "conv" else Backend.DIGIT_SLICING
    samples = read_samples(Path(args.input), args.format)
    n = len(samples)
    if not is_power_of_two(n) or n < 2:
        raise InputError(f"{args.input}: sample count {n} is not a power of two >= 2")
    if args.n is not None and args.n != n:
        raise InputError(f"{args.input}: expected {args.n} samples, file has {n}")

    pl = plan(n, backend, cfg)
    sig = Signal(tuple(samples))
    counts = OpCounts()
    t0 = time.perf_counter_ns()
    spec = fft(pl, sig, counts)
    timing_ns = time.perf_counter_ns() - t0

    out_path = Path(args.out) if args.out else Path(args.input).with_suffix(".fft")
    write_samples(out_path, args.format, spec.bins)

    if args.report:
        error = None
        if n <= ORACLE_LIMIT:
            error = compare(spec, dft_reference(sig.to_complex()))
        report = run_report(backend, n, cfg, timing_ns, counts, error)
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n")
    return 0


# ---------------------------------------------------------------------------
# rom subcommand
# ---------------------------------------------------------------------------

def cmd_rom(args) -> int:
    if not is_power_of_two(args.n) or args.n < 2:
        raise UsageError(f"--n must be a power of two >= 2, got {args.n}")
    text = rom_to_hex(make_rom(args.n))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------------

# Twiddle raw values exercising saturation, halving, zero and negative cases.
VERIFY_TWIDDLE_RAWS = (0x7FFF, 0x5A82, 0x4000, 0x2000, 0x0000,
                       -0x7FFF, -0x5A82, -0x2000)

ORACLE_SIZES = (8, 64, 256, 1024)


def _suite_slicing_roundtrip(full: bool, rng: random.Random) -> tuple[bool, str]:
    even = range(-32768, 32768) if full else [rng.randrange(-32768, 32768)
                                              for _ in range(4096)]
    checked = 0
    for raw in even:
        if reassemble(slice_word(Fixed16(raw))).raw != raw:
            return False, f"even roundtrip failed at raw {raw}"
        checked += 1
    odd = (range(ODD_RAW_MIN, ODD_RAW_MAX + 1) if full
           else [rng.randrange(ODD_RAW_MIN, ODD_RAW_MAX + 1) for _ in range(8192)])
    odd_checked = 0
    for raw in odd:
        if reassemble_odd(slice_odd(raw)) != raw:
            return False, f"odd roundtrip failed at raw {raw}"
        odd_checked += 1
    return True, f"{checked} even + {odd_checked} odd words"


def _suite_multiplier_equivalence(full: bool, rng: random.Random,
                                  slicing_rounding: RoundingMode | None = None,
                                  ) -> tuple[bool, str]:
    """Digit-slicing real product vs q15_mul over the verify twiddle set.

    slicing_rounding overrides the rounding of the slicing side only; the
    tests use it to demonstrate that a rounding mismatch is caught.
    """
    params = SliceParams(4, 4)
    nearest_slice = (slicing_rounding or RoundingMode.NEAREST_HALF_UP) \
        is RoundingMode.NEAREST_HALF_UP
    checked = 0
    for w_raw in VERIFY_TWIDDLE_RAWS:
        tables = make_block_tables(Twiddle(Fixed16(w_raw), Fixed16(0)), params)
        xs = range(-32768, 32768) if full else [rng.randrange(-32768, 32768)
                                                for _ in range(4096)]
        for x in xs:
            got = mul_slicing_raw(x, tables.wr_low, tables.wr_top, 4, 4,
                                  nearest_slice)
            want = mul_raw(x, w_raw, nearest=True)
            if got != want:
                return False, (f"mismatch at x={x} w={w_raw}: "
                               f"slicing {got}, conventional {want}")
            checked += 1
    return True, f"{checked} products over {len(VERIFY_TWIDDLE_RAWS)} twiddles"


def _suite_backend_equivalence(full: bool, rng: random.Random) -> tuple[bool, str]:
    sizes = [2, 4, 8, 16, 32, 64] + ([128, 256, 1024, 4096] if full else [])
    reps = 2 if full else 4
    cfgs = [DatapathConfig(),
            DatapathConfig(rounding=RoundingMode.TRUNCATE, scaling=ScalingMode.NONE)]
    checked = 0
    for n in sizes:
        for cfg in cfgs:
            for _ in range(reps):
                sig = random_signal(n, rng)
                res = fft_both_backends(n, sig, cfg)
                if res.conventional.bins != res.digit_slicing.bins:
                    return False, f"spectra differ at N={n}"
                checked += 1
    return True, f"{checked} transforms bit-identical"


def _suite_oracle_tolerance(full: bool, rng: random.Random) -> tuple[bool, str]:
    """Max error of the spectrum against DFT/N within log2(N) * 2^-14.

    compare() reports errors on the reference (DFT) scale; dividing by
    2^scale_log2 moves them to the Q1.15 output scale the budget is
    stated on.
    """
    reps = 20 if full else 3
    worst_ratio = 0.0
    for n in ORACLE_SIZES:
        budget = math.log2(n) * 2.0 ** -14
        pl = plan(n, Backend.DIGIT_SLICING, DatapathConfig())
        for _ in range(reps):
            sig = random_signal(n, rng)
            spec = fft(pl, sig, OpCounts())
            rep = compare(spec, dft_reference(sig.to_complex()))
            err = rep.max_abs_err / 2.0 ** spec.scale_log2
            worst_ratio = max(worst_ratio, err / budget)
            if err > budget:
                return False, f"N={n}: error {err:.3e} over {budget:.3e}"
            if n == 256 and (rep.sqnr_db is None or rep.sqnr_db < 60.0):
                return False, f"N=256 SQNR {rep.sqnr_db} below 60 dB"
    return True, f"worst error at {100 * worst_ratio:.0f}% of budget"


def run_verify(level: str, slicing_rounding: RoundingMode | None = None) -> int:
    """Run all verification suites; exit status 0 iff every suite passes."""
    full = level == "full"
    rng = random.Random(VERIFY_SEED)
    suites = [
        ("slicing-roundtrip", lambda: _suite_slicing_roundtrip(full, rng)),
        ("multiplier-equivalence",
         lambda: _suite_multiplier_equivalence(full, rng, slicing_rounding)),
        ("backend-equivalence", lambda: _suite_backend_equivalence(full, rng)),
        ("oracle-tolerance", lambda: _suite_oracle_tolerance(full, rng)),
    ]
    ok = True
    for name, suite in suites:
        passed, detail = suite()
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
        ok = ok and passed
    return 0 if ok else 3


def cmd_verify(args) -> int:
    return run_verify(args.level)


# ---------------------------------------------------------------------------
# bench subcommand
# ---------------------------------------------------------------------------

def cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.n.split(",") if tok]
    except ValueError as e:
        raise UsageError(f"--n must be a comma-separated integer list: {e}") from e
    if not sizes or any(not is_power_of_two(n) or n < 2 for n in sizes):
        raise UsageError(f"--n entries must be powers of two >= 2, got {args.n}")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")

    cfg = DatapathConfig()
    rng = random.Random(BENCH_SEED)
    runs = []
    claim_ok = True
    header = f"{'n':>6} {'backend':<8} {'median_us':>10} {'mults':>8} {'adds':>8} {'lookups':>8} {'shifts':>8}"
    print(header)
    for n in sizes:
        sig = random_signal(n, rng)
        log2n = n.bit_length() - 1
        for backend in (Backend.CONVENTIONAL, Backend.DIGIT_SLICING):
            pl = plan(n, backend, cfg)
            timings = []
            counts = OpCounts()
            for trial in range(args.trials):
                trial_counts = OpCounts()
                t0 = time.perf_counter_ns()
                fft(pl, sig, trial_counts)
                timings.append(time.perf_counter_ns() - t0)
                counts = trial_counts
            median_ns = int(statistics.median(timings))
            runs.append(run_report(backend, n, cfg, median_ns, counts))
            c = counts
            print(f"{n:>6} {backend.value:<8} {median_ns / 1000:>10.1f} "
                  f"{c.real_multiplies:>8} {c.real_adds:>8} "
                  f"{c.table_lookups:>8} {c.shifts:>8}")
            if backend is Backend.DIGIT_SLICING:
                expect_lookups = 4 * cfg.slice_params.b * (n // 2) * log2n
                if c.real_multiplies != 0 or c.table_lookups != expect_lookups:
                    claim_ok = False
            else:
                if c.real_multiplies != 4 * (n // 2) * log2n:
                    claim_ok = False

    print(f"multiplier-free claim: {'PASS' if claim_ok else 'FAIL'} "
          "(digit-slicing real_multiplies = 0)")
    if args.report:
        Path(args.report).write_text(json.dumps(
            {"trials": args.trials, "runs": runs, "multiplier_free": claim_ok},
            indent=2) + "\n")
    return 0 if claim_ok else 3


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsfft",
        description="Bit-exact Q1.15 radix-2 FFT with a digit-slicing "
                    "multiplier-less butterfly")
    sub = parser.add_subparsers(dest="command")

    p_fft = sub.add_parser("fft", help="transform a sample file")
    p_fft.add_argument("input", help="input sample file")
    p_fft.add_argument("--n", type=int, default=None,
                       help="expected sample count (checked against the file)")
    p_fft.add_argument("--backend", choices=("conv", "slice"), default="slice")
    p_fft.add_argument("--format", choices=("text", "raw"), default="text")
    p_fft.add_argument("--scaling", choices=("half", "none"), default="half")
    p_fft.add_argument("--rounding", choices=("nearest", "trunc"), default="nearest")
    p_fft.add_argument("--blocks", type=int, default=4, metavar="B",
                       help="digit-slicing block count (b*p must be 16)")
    p_fft.add_argument("--width", type=int, default=4, metavar="P",
                       help="bits per block")
    p_fft.add_argument("--out", default=None, help="output path (default: input.fft)")
    p_fft.add_argument("--report", default=None,
                       help="write a JSON run report (oracle error included "
                            f"for n <= {ORACLE_LIMIT})")
    p_fft.set_defaults(func=cmd_fft)

    p_rom = sub.add_parser("rom", help="emit a twiddle ROM as hex")
    p_rom.add_argument("--n", type=int, required=True, help="transform size")
    p_rom.add_argument("--out", default=None, help="output path (default: stdout)")
    p_rom.set_defaults(func=cmd_rom)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--level", choices=("quick", "full"), default="quick")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="benchmark both butterfly backends")
    p_bench.add_argument("--n", default="64,256,1024",
                         help="comma-separated transform sizes")
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--report", default=None, help="write a JSON report")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if not getattr(args, "func", None):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
