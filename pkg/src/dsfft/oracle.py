"""Independent ground truth for the fixed-point datapath.

dft_reference is the direct O(N^2) sum X(k) = sum_n x(n) e^{-j2*pi*k*n/N}
in double precision, deliberately not an FFT, so its rounding behavior is
uncorrelated with the transform under test. mul_reference recomputes the
Q1.15 product contract through a different formulation (divmod instead
of bias-and-shift) and serves as the multiplier oracle. compare reduces
a fixed-point spectrum against a reference into error metrics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import Spectrum
from .fixedpoint import RAW_MAX, RAW_MIN, RoundingMode


@dataclass(frozen=True)
class RealSpectrum:
    """Double-precision reference bins."""

    bins: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "bins", np.asarray(self.bins, dtype=np.complex128))

    @property
    def n(self) -> int:
        return len(self.bins)


@dataclass(frozen=True)
class ErrorReport:
    """Error metrics of a spectrum against a reference.

    max_abs_err is the largest Euclidean norm of a per-bin complex error;
    sqnr_db is 10*log10(ref energy / error energy), None when the
    reference has no energy, inf when the error is exactly zero.
    """

    max_abs_err: float
    rms_err: float
    sqnr_db: float | None
    worst_bin: int

    def as_dict(self) -> dict:
        # Strict JSON has no Infinity token; an exact-zero error reports
        # its sqnr as absent, same as a zero-energy reference.
        sqnr = self.sqnr_db
        if sqnr is not None and not math.isfinite(sqnr):
            sqnr = None
        return {
            "max_abs_err": self.max_abs_err,
            "rms_err": self.rms_err,
            "sqnr_db": sqnr,
            "worst_bin": self.worst_bin,
        }


def _exp_matrix(n: int, sign: float) -> np.ndarray:
    k = np.arange(n)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / n)


def dft_reference(x) -> RealSpectrum:
    """Direct evaluation of bin k = sum_n x(n) e^{-j2 pi k n / N}."""
    xv = np.asarray(list(x), dtype=np.complex128)
    n = len(xv)
    if n < 1:
        raise ValueError("empty input")
    return RealSpectrum(_exp_matrix(n, -1.0) @ xv)


def idft_reference(x) -> RealSpectrum:
    """Inverse counterpart with the 1/N factor; sanity inverse of dft_reference."""
    xv = np.asarray(list(x), dtype=np.complex128)
    n = len(xv)
    if n < 1:
        raise ValueError("empty input")
    return RealSpectrum((_exp_matrix(n, +1.0) @ xv) / n)


def compare(spec: Spectrum, ref: RealSpectrum) -> ErrorReport:
    """Metrics of 2**scale_log2 * spec against ref, over all bins."""
    if spec.n != ref.n:
        raise ValueError(f"length mismatch: spectrum {spec.n}, reference {ref.n}")
    scaled = np.array(spec.to_complex(), dtype=np.complex128) * (2.0 ** spec.scale_log2)
    err = np.abs(scaled - ref.bins)
    worst = int(np.argmax(err))
    err_energy = float(np.sum(err * err))
    ref_energy = float(np.sum(np.abs(ref.bins) ** 2))
    if ref_energy == 0.0:
        sqnr = None
    elif err_energy == 0.0:
        sqnr = math.inf
    else:
        sqnr = 10.0 * math.log10(ref_energy / err_energy)
    return ErrorReport(
        max_abs_err=float(err[worst]),
        rms_err=float(np.sqrt(np.mean(err * err))),
        sqnr_db=sqnr,
        worst_bin=worst,
    )


def mul_reference(a_raw: int, b_raw: int,
                  rnd: RoundingMode = RoundingMode.NEAREST_HALF_UP) -> int:
    """Q1.15 product oracle via divmod; independent of the fixedpoint module.

    Floor division gives the truncating result directly; rounding to
    nearest (ties away from the floor) adds one when the remainder
    reaches half a quantum. Saturates into the 16-bit range.
    """
    if not (RAW_MIN <= a_raw <= RAW_MAX and RAW_MIN <= b_raw <= RAW_MAX):
        raise ValueError("operands out of 16-bit range")
    q, r = divmod(a_raw * b_raw, 1 << 15)
    if rnd is RoundingMode.NEAREST_HALF_UP and r >= (1 << 14):
        q += 1
    return min(max(q, RAW_MIN), RAW_MAX)
