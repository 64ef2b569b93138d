"""Radix-2 DIT butterfly backends: conventional and digit-slicing.

Both backends compute, with W = Wr - j*Wi,

    Xr = Ar + Br*Wr + Bi*Wi        Yr = Ar - Br*Wr - Bi*Wi
    Xi = Ai + Bi*Wr - Br*Wi        Yi = Ai - Bi*Wr + Br*Wi

Each of the four real products is rounded to Q1.15 once, at bit 15,
under the configured rounding mode. The three-term output sums above are
then evaluated exactly, as a hardware adder tree would with guard bits,
and narrowed once per output component: after the half-scaling shift
when HalfPerStage is on, directly under the overflow policy otherwise.
Keeping the product pair Br*Wr + Bi*Wi exact instead of clamping it to
Q1.15 before the add matters: intermediate FFT values regrow toward 1
and a clamped pair saturates sporadically on ordinary signals, wrecking
the error budget, while the exact sum stays well inside the guard bits.
With scaling None under Wrap overflow the two choices are bit-identical
(mod-2^16 arithmetic commutes with the adds); Saturate, and the halving
shift of HalfPerStage, are what see the difference.

The conventional backend uses four Q1.15 real multipliers for the
products. The digit-slicing backend replaces each multiplier with b
table lookups accumulated by shift-adds: the multiplicand is split into
p-bit blocks X_k and the product accumulator is sum_k T[X_k] << (p*k),
which equals x_raw * w_raw exactly because T[d] = d * w_raw. The
accumulator is rescaled at the same bit position the conventional
multiply rescales, so the two backends agree bit-exactly on every input
and every config. That equivalence is the central contract here and is
swept exhaustively in the tests.

With HalfPerStage the halved output can only saturate if the true
butterfly result magnitude reaches 1 (|A +- B*W| >= 2), which cannot
happen while the product sum stays within Q1.15; scaling None relies on
the overflow policy as usual.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .fixedpoint import (
    ComplexFixed,
    Fixed16,
    OverflowMode,
    RoundingMode,
    clamp_raw,
    mul_raw,
    rescale_raw,
    wrap_raw,
)
from .slicing import SliceParams, EVEN_DEFAULT
from .twiddle import BlockProductTable, Twiddle


class ScalingMode(enum.Enum):
    """Per-stage growth control for the butterfly add/subtract."""

    NONE = "none"
    HALF_PER_STAGE = "half"


@dataclass(frozen=True)
class DatapathConfig:
    """One configuration governs a whole datapath run; reports echo it."""

    rounding: RoundingMode = RoundingMode.NEAREST_HALF_UP
    overflow: OverflowMode = OverflowMode.SATURATE
    scaling: ScalingMode = ScalingMode.HALF_PER_STAGE
    slice_params: SliceParams = EVEN_DEFAULT


@dataclass(frozen=True)
class ButterflyInput:
    a: ComplexFixed
    b_in: ComplexFixed
    w: Twiddle


@dataclass(frozen=True)
class ButterflyOutput:
    x: ComplexFixed
    y: ComplexFixed


@dataclass
class OpCounts:
    """Datapath operation counters; they only ever increase during a run.

    Conventions: each conventional butterfly is 4 real_multiplies plus 6
    real_adds (2 combining the products, 4 for the add/subtract pair).
    Each digit-slicing butterfly is 4*b table_lookups plus 4*(b-1) fused
    shift-add accumulation steps (tallied as shifts) plus the same 6
    combination adds and zero real multiplies.
    """

    real_multiplies: int = 0
    real_adds: int = 0
    table_lookups: int = 0
    shifts: int = 0

    def tally_conventional_mul(self, n: int = 1) -> None:
        self.real_multiplies += 4 * n
        self.real_adds += 2 * n

    def tally_slicing_mul(self, b: int, n: int = 1) -> None:
        self.table_lookups += 4 * b * n
        self.shifts += 4 * (b - 1) * n
        self.real_adds += 2 * n

    def tally_butterfly_addsub(self, n: int = 1) -> None:
        self.real_adds += 4 * n

    def merge(self, other: "OpCounts") -> None:
        self.real_multiplies += other.real_multiplies
        self.real_adds += other.real_adds
        self.table_lookups += other.table_lookups
        self.shifts += other.shifts

    def copy(self) -> "OpCounts":
        return replace(self)

    def reset(self) -> None:
        self.real_multiplies = self.real_adds = self.table_lookups = self.shifts = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "real_multiplies": self.real_multiplies,
            "real_adds": self.real_adds,
            "table_lookups": self.table_lookups,
            "shifts": self.shifts,
        }


_counts = OpCounts()


def reset_counts() -> None:
    """Zero the module-level counters (used when no explicit OpCounts is passed)."""
    _counts.reset()


def read_counts() -> OpCounts:
    """Snapshot of the module-level counters."""
    return _counts.copy()


# ---------------------------------------------------------------------------
# Raw integer cores. The public operations below and the FFT engine both
# delegate here, so there is a single source of truth for the arithmetic.
# The cmul cores return the exact product-pair sums at guard-bit width;
# narrowing to Q1.15 is the caller's step.
# ---------------------------------------------------------------------------

def _narrow(v: int, saturate: bool) -> int:
    return clamp_raw(v) if saturate else wrap_raw(v)


def cmul_conventional_sums_raw(br: int, bi: int, wr: int, wi: int,
                               nearest: bool) -> tuple[int, int]:
    """Exact (Br*Wr + Bi*Wi, Bi*Wr - Br*Wi) from four rounded real products."""
    return (mul_raw(br, wr, nearest) + mul_raw(bi, wi, nearest),
            mul_raw(bi, wr, nearest) - mul_raw(br, wi, nearest))


def sliced_product_acc(x_raw: int, low: tuple[int, ...], top: tuple[int, ...],
                       b: int, p: int) -> int:
    """Full-precision accumulator sum_k T[X_k] << (p*k) == x_raw * w_raw.

    The top block indexes the sign-corrected table, so its negative
    weight needs no separate subtraction network.
    """
    u = x_raw & 0xFFFF
    mask = (1 << p) - 1
    shift = p * (b - 1)
    acc = top[(u >> shift) & mask] << shift
    for k in range(b - 1):
        acc += low[(u >> (p * k)) & mask] << (p * k)
    return acc


def mul_slicing_raw(x_raw: int, low: tuple[int, ...], top: tuple[int, ...],
                    b: int, p: int, nearest: bool) -> int:
    """One real product by table lookups and shift-adds; same rescale as mul_raw."""
    return clamp_raw(rescale_raw(sliced_product_acc(x_raw, low, top, b, p), 15, nearest))


def cmul_slicing_sums_raw(br: int, bi: int, tables: BlockProductTable,
                          nearest: bool) -> tuple[int, int]:
    """Digit-slicing counterpart of cmul_conventional_sums_raw."""
    b, p = tables.params.b, tables.params.p
    br_wr = mul_slicing_raw(br, tables.wr_low, tables.wr_top, b, p, nearest)
    bi_wi = mul_slicing_raw(bi, tables.wi_low, tables.wi_top, b, p, nearest)
    bi_wr = mul_slicing_raw(bi, tables.wr_low, tables.wr_top, b, p, nearest)
    br_wi = mul_slicing_raw(br, tables.wi_low, tables.wi_top, b, p, nearest)
    return (br_wr + bi_wi, bi_wr - br_wi)


def butterfly_addsub_raw(ar: int, ai: int, tr: int, ti: int,
                         half: bool, nearest: bool, saturate: bool,
                         ) -> tuple[int, int, int, int]:
    """X = A + T, Y = A - T on raws; T is the exact product-pair sum.

    With halving the guard-bit sums are rescaled before narrowing; the
    narrowed value only falls outside Q1.15 when the true result
    magnitude reaches 1.
    """
    if half:
        return (_narrow(rescale_raw(ar + tr, 1, nearest), saturate),
                _narrow(rescale_raw(ai + ti, 1, nearest), saturate),
                _narrow(rescale_raw(ar - tr, 1, nearest), saturate),
                _narrow(rescale_raw(ai - ti, 1, nearest), saturate))
    return (_narrow(ar + tr, saturate), _narrow(ai + ti, saturate),
            _narrow(ar - tr, saturate), _narrow(ai - ti, saturate))


def butterfly_conventional_raw(ar: int, ai: int, br: int, bi: int,
                               wr: int, wi: int, half: bool, nearest: bool,
                               saturate: bool) -> tuple[int, int, int, int]:
    tr, ti = cmul_conventional_sums_raw(br, bi, wr, wi, nearest)
    return butterfly_addsub_raw(ar, ai, tr, ti, half, nearest, saturate)


def butterfly_slicing_raw(ar: int, ai: int, br: int, bi: int,
                          tables: BlockProductTable, half: bool, nearest: bool,
                          saturate: bool) -> tuple[int, int, int, int]:
    tr, ti = cmul_slicing_sums_raw(br, bi, tables, nearest)
    return butterfly_addsub_raw(ar, ai, tr, ti, half, nearest, saturate)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def _modes(cfg: DatapathConfig) -> tuple[bool, bool, bool]:
    return (cfg.scaling is ScalingMode.HALF_PER_STAGE,
            cfg.rounding is RoundingMode.NEAREST_HALF_UP,
            cfg.overflow is OverflowMode.SATURATE)


def _check_tables(tables: BlockProductTable, cfg: DatapathConfig) -> None:
    if tables.params != cfg.slice_params:
        raise ValueError(
            f"table slicing {tables.params} does not match config {cfg.slice_params}")


def complex_mul_conventional(b_in: ComplexFixed, w: Twiddle, cfg: DatapathConfig,
                             counts: OpCounts | None = None) -> ComplexFixed:
    """Standalone B * W: four rounded products combined under cfg.overflow."""
    _, nearest, saturate = _modes(cfg)
    tr, ti = cmul_conventional_sums_raw(b_in.re.raw, b_in.im.raw,
                                        w.wr.raw, w.wi.raw, nearest)
    (counts if counts is not None else _counts).tally_conventional_mul()
    return ComplexFixed(Fixed16(_narrow(tr, saturate)), Fixed16(_narrow(ti, saturate)))


def complex_mul_digit_slicing(b_in: ComplexFixed, tables: BlockProductTable,
                              cfg: DatapathConfig,
                              counts: OpCounts | None = None) -> ComplexFixed:
    """B * W by per-block lookups; bit-exactly equal to the conventional path."""
    _check_tables(tables, cfg)
    _, nearest, saturate = _modes(cfg)
    tr, ti = cmul_slicing_sums_raw(b_in.re.raw, b_in.im.raw, tables, nearest)
    (counts if counts is not None else _counts).tally_slicing_mul(tables.params.b)
    return ComplexFixed(Fixed16(_narrow(tr, saturate)), Fixed16(_narrow(ti, saturate)))


def butterfly_conventional(inp: ButterflyInput, cfg: DatapathConfig,
                           counts: OpCounts | None = None) -> ButterflyOutput:
    """X = A + B*W, Y = A - B*W with the four-multiplier complex product."""
    half, nearest, saturate = _modes(cfg)
    xr, xi, yr, yi = butterfly_conventional_raw(
        inp.a.re.raw, inp.a.im.raw, inp.b_in.re.raw, inp.b_in.im.raw,
        inp.w.wr.raw, inp.w.wi.raw, half, nearest, saturate)
    c = counts if counts is not None else _counts
    c.tally_conventional_mul()
    c.tally_butterfly_addsub()
    return ButterflyOutput(ComplexFixed(Fixed16(xr), Fixed16(xi)),
                           ComplexFixed(Fixed16(yr), Fixed16(yi)))


def butterfly_digit_slicing(inp: ButterflyInput, tables: BlockProductTable,
                            cfg: DatapathConfig,
                            counts: OpCounts | None = None) -> ButterflyOutput:
    """Same contract as butterfly_conventional with the multiplier-less product."""
    _check_tables(tables, cfg)
    half, nearest, saturate = _modes(cfg)
    xr, xi, yr, yi = butterfly_slicing_raw(
        inp.a.re.raw, inp.a.im.raw, inp.b_in.re.raw, inp.b_in.im.raw,
        tables, half, nearest, saturate)
    c = counts if counts is not None else _counts
    c.tally_slicing_mul(tables.params.b)
    c.tally_butterfly_addsub()
    return ButterflyOutput(ComplexFixed(Fixed16(xr), Fixed16(xi)),
                           ComplexFixed(Fixed16(yr), Fixed16(yi)))
