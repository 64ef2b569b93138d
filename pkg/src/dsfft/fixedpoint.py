"""Q1.15 two's-complement fixed-point arithmetic.

One word is 16 bits: 1 sign bit + 15 fractional bits, so the raw integer
r in [-32768, 32767] represents the value r * 2^-15 in [-1, 1 - 2^-15].
Every datapath in this package (slicing, tables, butterflies, FFT stages)
is defined in terms of the exact integer semantics in this module.

Rounding and overflow are explicit policies, not accidents:

* ``RoundingMode.NEAREST_HALF_UP`` adds 2^14 before the 15-bit arithmetic
  right shift (round to nearest, ties toward +inf). Default; halves the
  worst-case product error versus truncation.
* ``RoundingMode.TRUNCATE`` is the bare arithmetic shift, the cheapest
  hardware.
* ``OverflowMode.SATURATE`` clamps sums to the 16-bit extremes (default);
  ``OverflowMode.WRAP`` keeps the low 16 bits, modeling a raw adder.

Products always saturate: the only 32-bit product that overflows the
Q1.15 result is (-1) * (-1), which clamps to 0x7FFF by DSP convention.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

WORD_BITS = 16
FRAC_BITS = 15
SCALE = 1 << FRAC_BITS           # 32768
RAW_MIN = -(1 << (WORD_BITS - 1))  # -32768
RAW_MAX = (1 << (WORD_BITS - 1)) - 1  # 32767


class RoundingMode(enum.Enum):
    """Rescale rule applied when narrowing a wide product back to Q1.15."""

    TRUNCATE = "trunc"
    NEAREST_HALF_UP = "nearest"


class OverflowMode(enum.Enum):
    """What an addition or subtraction does when the sum leaves 16 bits."""

    SATURATE = "saturate"
    WRAP = "wrap"


# ---------------------------------------------------------------------------
# Raw-integer primitives. The FFT hot path runs on these directly; the
# Fixed16 operations below are thin wrappers with identical semantics.
# ---------------------------------------------------------------------------

def clamp_raw(v: int) -> int:
    """Saturate an integer to the 16-bit signed range."""
    if v > RAW_MAX:
        return RAW_MAX
    if v < RAW_MIN:
        return RAW_MIN
    return v


def wrap_raw(v: int) -> int:
    """Keep the low 16 bits of an integer, reinterpreted as signed."""
    v &= 0xFFFF
    return v - 0x10000 if v & 0x8000 else v


def add_raw(a: int, b: int, saturate: bool = True) -> int:
    s = a + b
    if RAW_MIN <= s <= RAW_MAX:
        return s
    return clamp_raw(s) if saturate else wrap_raw(s)


def sub_raw(a: int, b: int, saturate: bool = True) -> int:
    s = a - b
    if RAW_MIN <= s <= RAW_MAX:
        return s
    return clamp_raw(s) if saturate else wrap_raw(s)


def rescale_raw(acc: int, shift: int, nearest: bool = True) -> int:
    """Arithmetic right shift with optional round-to-nearest (half up).

    Python's ``>>`` on negative ints is an arithmetic (sign-preserving,
    floor) shift, same as a hardware ASR. No saturation here; callers
    narrow afterwards if the destination is 16 bits.
    """
    if nearest:
        acc += 1 << (shift - 1)
    return acc >> shift


def mul_raw(a: int, b: int, nearest: bool = True) -> int:
    """Full 32-bit product of two Q1.15 raws, rescaled and saturated.

    The product is Q2.30; the 15-bit rescale brings it back to Q1.15.
    Only (-32768) * (-32768) saturates.
    """
    return clamp_raw(rescale_raw(a * b, FRAC_BITS, nearest))


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fixed16:
    """One Q1.15 word. Equality is bit-exact equality of the raw field."""

    raw: int

    def __post_init__(self) -> None:
        if not (RAW_MIN <= self.raw <= RAW_MAX):
            raise ValueError(f"raw {self.raw} outside 16-bit signed range")

    @classmethod
    def from_real(cls, v: float) -> "Fixed16":
        """Quantize a real number, round to nearest (ties toward +inf).

        Out-of-range values saturate, so from_real(1.0) is 0x7FFF
        (1 - 2^-15) and from_real(-1.0) is exactly 0x8000.
        """
        if not math.isfinite(v):
            raise ValueError(f"cannot quantize non-finite value {v!r}")
        return cls(clamp_raw(math.floor(v * SCALE + 0.5)))

    def to_real(self) -> float:
        """Exact value raw * 2^-15 (dyadic rationals are exact in a double)."""
        return self.raw / SCALE

    def to_hex(self) -> str:
        """Render as exactly four uppercase hex digits of the raw word."""
        return f"{self.raw & 0xFFFF:04X}"

    @classmethod
    def from_hex(cls, text: str) -> "Fixed16":
        """Parse the four-hex-digit rendering back to a word."""
        if len(text) != 4:
            raise ValueError(f"expected 4 hex digits, got {text!r}")
        u = int(text, 16)
        return cls(u - 0x10000 if u & 0x8000 else u)

    def __repr__(self) -> str:
        return f"Fixed16(0x{self.raw & 0xFFFF:04X} = {self.to_real():+.6f})"


@dataclass(frozen=True)
class ComplexFixed:
    """A complex sample: real/imaginary Fixed16 pair, bit-exact equality."""

    re: Fixed16
    im: Fixed16

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexFixed":
        return cls(Fixed16.from_real(z.real), Fixed16.from_real(z.imag))

    @classmethod
    def from_raws(cls, re_raw: int, im_raw: int) -> "ComplexFixed":
        return cls(Fixed16(re_raw), Fixed16(im_raw))

    def to_complex(self) -> complex:
        return complex(self.re.to_real(), self.im.to_real())

    def conjugate(self) -> "ComplexFixed":
        # -(-1) is not representable; saturate like the datapath would.
        return ComplexFixed(self.re, Fixed16(clamp_raw(-self.im.raw)))


CZERO = ComplexFixed(Fixed16(0), Fixed16(0))


# ---------------------------------------------------------------------------
# Q1.15 operations
# ---------------------------------------------------------------------------

def q15_add(a: Fixed16, b: Fixed16, mode: OverflowMode = OverflowMode.SATURATE) -> Fixed16:
    """Integer sum of the raws under the given overflow policy."""
    return Fixed16(add_raw(a.raw, b.raw, mode is OverflowMode.SATURATE))


def q15_sub(a: Fixed16, b: Fixed16, mode: OverflowMode = OverflowMode.SATURATE) -> Fixed16:
    """Integer difference of the raws under the given overflow policy."""
    return Fixed16(sub_raw(a.raw, b.raw, mode is OverflowMode.SATURATE))


def q15_mul(a: Fixed16, b: Fixed16,
            rnd: RoundingMode = RoundingMode.NEAREST_HALF_UP) -> Fixed16:
    """Q1.15 product: exact 32-bit multiply, one rescale, saturate."""
    return Fixed16(mul_raw(a.raw, b.raw, rnd is RoundingMode.NEAREST_HALF_UP))


def scale_half(x: Fixed16, rnd: RoundingMode = RoundingMode.NEAREST_HALF_UP) -> Fixed16:
    """Rescale by 2^-1 under the rounding mode (per-stage growth control)."""
    return Fixed16(rescale_raw(x.raw, 1, rnd is RoundingMode.NEAREST_HALF_UP))
