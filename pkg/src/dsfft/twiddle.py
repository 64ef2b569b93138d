"""Twiddle factor generation, ROM storage, and per-block product tables.

Twiddles follow the W = Wr - j*Wi convention: entry k of an N-point ROM
holds wr = cos(2*pi*k/N) and wi = sin(2*pi*k/N), both quantized to Q1.15.
cos(0) = 1 is not representable and clamps to 0x7FFF; the butterfly then
treats W = 1 like any other coefficient (no bypass), which keeps one
uniform datapath across backends.

Because the coefficients are known ahead of time, each one also gets a
table of pre-scaled partial products T[d] = d * w_raw for every possible
p-bit block digit. The multiplier-less multiply is then pure lookups and
shift-adds; the tables store exact integers (20-bit range for p = 4) so
the one rescale per real product lands on the same bit position as a
conventional Q1.15 multiply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fixedpoint import Fixed16
from .slicing import SliceParams, EVEN_DEFAULT


class RomFormatError(ValueError):
    """Raised by rom_from_hex on malformed text; carries the 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class Twiddle:
    """A quantized coefficient pair, interpreted as W = wr - j*wi."""

    wr: Fixed16
    wi: Fixed16


@dataclass(frozen=True)
class TwiddleRom:
    """The N/2 coefficients W_N^k, k in [0, N/2), a radix-2 DIT FFT needs."""

    n: int
    entries: tuple[Twiddle, ...]


@dataclass(frozen=True)
class BlockProductTable:
    """Partial products of one twiddle against every block digit.

    ``wr_low``/``wi_low`` cover the unsigned digits d in [0, 2^p) of the
    lower blocks. ``wr_top``/``wi_top`` are the sign-corrected variants
    for the top block, indexed by the raw p-bit pattern but storing
    (d - 2^p) * w_raw when the pattern's MSB is set, so d in [-2^(p-1),
    2^(p-1)).
    """

    params: SliceParams
    twiddle: Twiddle
    wr_low: tuple[int, ...]
    wr_top: tuple[int, ...]
    wi_low: tuple[int, ...]
    wi_top: tuple[int, ...]


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def make_rom(n: int) -> TwiddleRom:
    """Quantize the twiddles for an N-point transform into a ROM."""
    if not is_power_of_two(n) or n < 2:
        raise ValueError(f"transform size must be a power of two >= 2, got {n}")
    entries = []
    for k in range(n // 2):
        theta = 2.0 * math.pi * k / n
        entries.append(Twiddle(Fixed16.from_real(math.cos(theta)),
                               Fixed16.from_real(math.sin(theta))))
    return TwiddleRom(n, tuple(entries))


def _digit_tables(w_raw: int, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    full = 1 << p
    half = 1 << (p - 1)
    low = tuple(d * w_raw for d in range(full))
    top = tuple((d - full if d >= half else d) * w_raw for d in range(full))
    return low, top


def make_block_tables(t: Twiddle, params: SliceParams = EVEN_DEFAULT) -> BlockProductTable:
    """Precompute the exact partial products d * w_raw for one twiddle."""
    params.check_even()
    wr_low, wr_top = _digit_tables(t.wr.raw, params.p)
    wi_low, wi_top = _digit_tables(t.wi.raw, params.p)
    return BlockProductTable(params, t, wr_low, wr_top, wi_low, wi_top)


def rom_to_hex(rom: TwiddleRom) -> str:
    """Render a ROM as one "RRRR IIII" line per entry, newline-terminated."""
    return "".join(f"{t.wr.to_hex()} {t.wi.to_hex()}\n" for t in rom.entries)


def rom_from_hex(text: str) -> TwiddleRom:
    """Parse the rom_to_hex format back, bit-exactly.

    Raises RomFormatError naming the offending line for malformed lines,
    or with no line number when the entry count is not N/2 for a
    power-of-two N.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline
    entries = []
    for i, line in enumerate(lines, start=1):
        parts = line.split(" ")
        if len(parts) != 2:
            raise RomFormatError(f"expected 'RRRR IIII', got {line!r}", line=i)
        try:
            wr = Fixed16.from_hex(parts[0])
            wi = Fixed16.from_hex(parts[1])
        except ValueError as e:
            raise RomFormatError(str(e), line=i) from None
        entries.append(Twiddle(wr, wi))
    count = len(entries)
    if count < 1 or not is_power_of_two(count):
        raise RomFormatError(f"entry count {count} is not N/2 for a power-of-two N")
    return TwiddleRom(2 * count, tuple(entries))
