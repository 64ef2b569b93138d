"""Radix-2 decimation-in-time FFT over Fixed16 complex sequences.

In-place iterative structure: bit-reversal permutation first, then
log2(N) stages. Stage s (1-based) pairs elements at distance 2^(s-1)
within groups of 2^s and uses twiddle index j * (N / 2^s) for offset j
within the group, so every index lands in the half-turn ROM.

The butterfly backend is pluggable: Conventional (four real multipliers
per complex product) or DigitSlicing (block-product tables and
shift-adds, zero multipliers). A plan built for DigitSlicing carries one
BlockProductTable per ROM entry, precomputed because every twiddle is
known once N is fixed. Both backends share the one rescale position per
real product, so spectra are bit-identical between them for any input
and any DatapathConfig.

With HalfPerStage scaling each stage halves at a guard bit, the spectrum
approximates DFT(x)/N, and Spectrum.scale_log2 records log2(N) shifts;
with scaling None the configured overflow policy applies and scale_log2
is 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .butterfly import (
    DatapathConfig,
    OpCounts,
    ScalingMode,
    _counts as _module_counts,
    butterfly_addsub_raw,
    cmul_conventional_sums_raw,
    cmul_slicing_sums_raw,
)
from .fixedpoint import ComplexFixed, Fixed16
from .twiddle import BlockProductTable, TwiddleRom, is_power_of_two, make_block_tables, make_rom


class Backend(enum.Enum):
    CONVENTIONAL = "conv"
    DIGIT_SLICING = "slice"


def _check_length(n: int) -> None:
    if not is_power_of_two(n) or n < 2:
        raise ValueError(f"length must be a power of two >= 2, got {n}")


@dataclass(frozen=True)
class Signal:
    """Length-N complex fixed-point sequence, N a power of two >= 2."""

    samples: tuple[ComplexFixed, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", tuple(self.samples))
        _check_length(len(self.samples))

    @property
    def n(self) -> int:
        return len(self.samples)

    @classmethod
    def from_complex(cls, values: Iterable[complex]) -> "Signal":
        return cls(tuple(ComplexFixed.from_complex(complex(v)) for v in values))

    def to_complex(self) -> list[complex]:
        return [s.to_complex() for s in self.samples]


@dataclass(frozen=True)
class Spectrum:
    """Transform output; scale_log2 counts the right-shifts applied in total."""

    bins: tuple[ComplexFixed, ...]
    scale_log2: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "bins", tuple(self.bins))

    @property
    def n(self) -> int:
        return len(self.bins)

    def to_complex(self) -> list[complex]:
        """Stored bin values; multiply by 2**scale_log2 to undo the scaling."""
        return [b.to_complex() for b in self.bins]


@dataclass(frozen=True)
class FftPlan:
    """Immutable per-size state: ROM, optional block tables, datapath config."""

    n: int
    backend: Backend
    cfg: DatapathConfig
    rom: TwiddleRom
    tables: tuple[BlockProductTable, ...] | None

    def __post_init__(self) -> None:
        if self.rom.n != self.n:
            raise ValueError(f"rom is for N={self.rom.n}, plan is for N={self.n}")
        if (self.tables is not None) != (self.backend is Backend.DIGIT_SLICING):
            raise ValueError("block tables present iff backend is DigitSlicing")


def plan(n: int, backend: Backend = Backend.DIGIT_SLICING,
         cfg: DatapathConfig = DatapathConfig()) -> FftPlan:
    """Build ROM and, for the digit-slicing backend, all block tables up front."""
    _check_length(n)
    rom = make_rom(n)
    tables = None
    if backend is Backend.DIGIT_SLICING:
        tables = tuple(make_block_tables(t, cfg.slice_params) for t in rom.entries)
    return FftPlan(n=n, backend=backend, cfg=cfg, rom=rom, tables=tables)


def _reverse_bits(i: int, width: int) -> int:
    r = 0
    for _ in range(width):
        r = (r << 1) | (i & 1)
        i >>= 1
    return r


def bit_reverse_permute(sig: Signal) -> Signal:
    """Reorder sample i to index reverse_bits(i, log2 N); self-inverse."""
    n = sig.n
    width = n.bit_length() - 1
    out: list[ComplexFixed] = [sig.samples[0]] * n
    for i, s in enumerate(sig.samples):
        out[_reverse_bits(i, width)] = s
    return Signal(tuple(out))


def _fft_raw(pl: FftPlan, res: list[int], ims: list[int]) -> None:
    """In-place stage loop on raw component lists (already bit-reversed)."""
    n = pl.n
    log2n = n.bit_length() - 1
    cfg = pl.cfg
    half_scale = cfg.scaling is ScalingMode.HALF_PER_STAGE
    nearest = cfg.rounding.value == "nearest"
    saturate = cfg.overflow.value == "saturate"
    slicing = pl.backend is Backend.DIGIT_SLICING
    entries = pl.rom.entries
    tables = pl.tables

    for s in range(1, log2n + 1):
        m = 1 << s
        half = m >> 1
        tstep = n >> s
        for base in range(0, n, m):
            for j in range(half):
                i0 = base + j
                i1 = i0 + half
                br, bi = res[i1], ims[i1]
                if slicing:
                    tr, ti = cmul_slicing_sums_raw(br, bi, tables[j * tstep],
                                                   nearest)
                else:
                    w = entries[j * tstep]
                    tr, ti = cmul_conventional_sums_raw(br, bi, w.wr.raw,
                                                        w.wi.raw, nearest)
                res[i0], ims[i0], res[i1], ims[i1] = butterfly_addsub_raw(
                    res[i0], ims[i0], tr, ti, half_scale, nearest, saturate)


def _tally(pl: FftPlan, counts: OpCounts) -> None:
    n_bf = (pl.n // 2) * (pl.n.bit_length() - 1)
    if pl.backend is Backend.DIGIT_SLICING:
        counts.tally_slicing_mul(pl.cfg.slice_params.b, n_bf)
    else:
        counts.tally_conventional_mul(n_bf)
    counts.tally_butterfly_addsub(n_bf)


def fft(pl: FftPlan, sig: Signal, counts: OpCounts | None = None) -> Spectrum:
    """Transform sig with the plan's backend; bit-exact for a fixed plan."""
    if sig.n != pl.n:
        raise ValueError(f"signal length {sig.n} does not match plan N={pl.n}")
    rev = bit_reverse_permute(sig)
    res = [s.re.raw for s in rev.samples]
    ims = [s.im.raw for s in rev.samples]
    _fft_raw(pl, res, ims)
    _tally(pl, counts if counts is not None else _module_counts)
    scale = pl.n.bit_length() - 1 if pl.cfg.scaling is ScalingMode.HALF_PER_STAGE else 0
    bins = tuple(ComplexFixed(Fixed16(r), Fixed16(i)) for r, i in zip(res, ims))
    return Spectrum(bins=bins, scale_log2=scale)


def ifft(pl: FftPlan, sig: Signal, counts: OpCounts | None = None) -> Spectrum:
    """Inverse transform as conjugate-in, forward fft, conjugate-out.

    With HalfPerStage this approximates the standard inverse DFT
    including its 1/N factor, so ifft(fft(x)) recovers x / N.
    """
    conj_in = Signal(tuple(s.conjugate() for s in sig.samples))
    out = fft(pl, conj_in, counts)
    return Spectrum(bins=tuple(b.conjugate() for b in out.bins),
                    scale_log2=out.scale_log2)


class BackendComparison(NamedTuple):
    conventional: Spectrum
    digit_slicing: Spectrum
    conventional_counts: OpCounts
    digit_slicing_counts: OpCounts


def fft_both_backends(n: int, sig: Signal,
                      cfg: DatapathConfig = DatapathConfig()) -> BackendComparison:
    """Run both backends on one input; the spectra must be bit-identical."""
    conv_counts = OpCounts()
    slice_counts = OpCounts()
    conv = fft(plan(n, Backend.CONVENTIONAL, cfg), sig, conv_counts)
    sliced = fft(plan(n, Backend.DIGIT_SLICING, cfg), sig, slice_counts)
    return BackendComparison(conv, sliced, conv_counts, slice_counts)


def impulse(n: int, amplitude: float = 0.5) -> Signal:
    """x[0] = amplitude, rest zero; handy fixture for exactness checks."""
    first = ComplexFixed(Fixed16.from_real(amplitude), Fixed16(0))
    rest = ComplexFixed(Fixed16(0), Fixed16(0))
    return Signal((first,) + (rest,) * (n - 1))


def random_signal(n: int, rng, limit: float = 0.9) -> Signal:
    """Uniform complex samples with |re|, |im| <= limit, quantized to Q1.15."""
    return Signal(tuple(
        ComplexFixed(Fixed16.from_real(rng.uniform(-limit, limit)),
                     Fixed16.from_real(rng.uniform(-limit, limit)))
        for _ in range(n)))
