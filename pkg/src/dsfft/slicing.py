"""Digit slicing: split fixed-point words into b blocks of p bits each.

Two schemes are covered:

* Even word lengths (16 bits here): b * p == 16, blocks indexed k = 0
  least-significant first, raw = sum_k X_k * 2^(p*k). Blocks X_0..X_{b-2}
  are unsigned p-bit fields; the top block X_{b-1} is signed, its MSB
  carrying negative weight. The FFT datapath uses this scheme with
  b = 4, p = 4 (four groups of four bits).
* Odd word lengths (17 bits here): (b - 1) * p + 1 == 17. A separate
  sign block holds only the sign (0 or -1); the b - 1 magnitude blocks
  are the unsigned p-bit fields of the low 16 bits, most significant
  first, so value = sign + sum_{k=1..b-1} X_k * 2^(-p*k).

Both slicings reassemble bit-exactly; the roundtrip is exhaustively
checked over all 65,536 even and 131,072 odd words in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fixedpoint import ComplexFixed, Fixed16

EVEN_WORD_BITS = 16
ODD_WORD_BITS = 17
ODD_RAW_MIN = -(1 << (ODD_WORD_BITS - 1))  # -65536
ODD_RAW_MAX = (1 << (ODD_WORD_BITS - 1)) - 1  # 65535


@dataclass(frozen=True)
class SliceParams:
    """b blocks of p bits. b*p = 16 (even scheme) or (b-1)*p + 1 = 17 (odd)."""

    b: int
    p: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.p < 1:
            raise ValueError(f"block count and width must be positive, got b={self.b} p={self.p}")

    def check_even(self) -> None:
        if self.b * self.p != EVEN_WORD_BITS:
            raise ValueError(f"even scheme needs b*p == {EVEN_WORD_BITS}, got b={self.b} p={self.p}")

    def check_odd(self) -> None:
        if (self.b - 1) * self.p + 1 != ODD_WORD_BITS:
            raise ValueError(
                f"odd scheme needs (b-1)*p + 1 == {ODD_WORD_BITS}, got b={self.b} p={self.p}")


EVEN_DEFAULT = SliceParams(b=4, p=4)
ODD_DEFAULT = SliceParams(b=5, p=4)


def _hex_field(value: int, p: int) -> str:
    digits = (p + 3) // 4
    return f"{value & ((1 << p) - 1):0{digits}X}"


@dataclass(frozen=True)
class SlicedWord:
    """Even-scheme decomposition, blocks[k] weighted 2^(p*k), k=0 is LSB."""

    params: SliceParams
    blocks: tuple[int, ...]

    def __str__(self) -> str:
        # Debug rendering "X3|X2|X1|X0": most significant block first.
        return "|".join(_hex_field(x, self.params.p) for x in reversed(self.blocks))


@dataclass(frozen=True)
class SlicedWordOdd:
    """Odd-scheme decomposition: sign block plus b-1 magnitude blocks.

    blocks[0] is the most significant magnitude block; blocks[i] carries
    weight 2^(-p*(i+1)) of the value.
    """

    params: SliceParams
    sign_block: int
    blocks: tuple[int, ...]

    def __str__(self) -> str:
        sign = "S" if self.sign_block else "0"
        return sign + "|" + "|".join(_hex_field(x, self.params.p) for x in self.blocks)


@dataclass(frozen=True)
class SlicedComplex:
    """Component-wise even-scheme slicing of a complex sample."""

    re: SlicedWord
    im: SlicedWord

    def __post_init__(self) -> None:
        if self.re.params != self.im.params:
            raise ValueError("re and im slicings must share SliceParams")


def split_raw(raw: int, b: int, p: int) -> tuple[int, ...]:
    """Unsigned p-bit fields of a 16-bit word, least significant first.

    The top field is returned unsigned; callers that need its signed
    reading (the even scheme) sign-extend it, callers that index a
    sign-corrected lookup table use it as is.
    """
    u = raw & 0xFFFF
    mask = (1 << p) - 1
    return tuple((u >> (p * k)) & mask for k in range(b))


def slice_word(x: Fixed16, params: SliceParams = EVEN_DEFAULT) -> SlicedWord:
    """Even-scheme slicing of a Q1.15 word into b blocks of p bits."""
    params.check_even()
    blocks = list(split_raw(x.raw, params.b, params.p))
    top = blocks[-1]
    if top >= 1 << (params.p - 1):  # MSB of the top block has negative weight
        top -= 1 << params.p
    blocks[-1] = top
    return SlicedWord(params, tuple(blocks))


def reassemble(s: SlicedWord) -> Fixed16:
    """Exact inverse of slice_word: raw = sum_k blocks[k] * 2^(p*k)."""
    b, p = s.params.b, s.params.p
    s.params.check_even()
    if len(s.blocks) != b:
        raise ValueError(f"expected {b} blocks, got {len(s.blocks)}")
    half = 1 << (p - 1)
    full = 1 << p
    for k, blk in enumerate(s.blocks):
        if k < b - 1:
            if not (0 <= blk < full):
                raise ValueError(f"block {k} value {blk} outside [0, {full - 1}]")
        elif not (-half <= blk < half):
            raise ValueError(f"top block value {blk} outside [{-half}, {half - 1}]")
    raw = 0
    for k, blk in enumerate(s.blocks):
        raw += blk << (p * k)
    return Fixed16(raw)


def slice_odd(raw: int, params: SliceParams = ODD_DEFAULT) -> SlicedWordOdd:
    """Odd-scheme slicing of a 17-bit two's-complement word.

    The sign block is 0 or -1 and carries the whole sign; the magnitude
    blocks are the p-bit fields of the low 16 bits, most significant
    first.
    """
    params.check_odd()
    if not (ODD_RAW_MIN <= raw <= ODD_RAW_MAX):
        raise ValueError(f"raw {raw} outside 17-bit signed range")
    sign_block = -1 if raw < 0 else 0
    low = raw & 0xFFFF
    mask = (1 << params.p) - 1
    nblocks = params.b - 1
    blocks = tuple(
        (low >> (EVEN_WORD_BITS - params.p * (k + 1))) & mask for k in range(nblocks))
    return SlicedWordOdd(params, sign_block, blocks)


def reassemble_odd(s: SlicedWordOdd) -> int:
    """Exact inverse of slice_odd over all 2^17 words."""
    s.params.check_odd()
    if s.sign_block not in (0, -1):
        raise ValueError(f"sign block must be 0 or -1, got {s.sign_block}")
    nblocks = s.params.b - 1
    if len(s.blocks) != nblocks:
        raise ValueError(f"expected {nblocks} magnitude blocks, got {len(s.blocks)}")
    full = 1 << s.params.p
    low = 0
    for k, blk in enumerate(s.blocks):
        if not (0 <= blk < full):
            raise ValueError(f"block {k + 1} value {blk} outside [0, {full - 1}]")
        low |= blk << (EVEN_WORD_BITS - s.params.p * (k + 1))
    return s.sign_block * (1 << EVEN_WORD_BITS) + low


def slice_complex(f: ComplexFixed, params: SliceParams = EVEN_DEFAULT) -> SlicedComplex:
    """Component-wise even-scheme slicing of re and im."""
    return SlicedComplex(slice_word(f.re, params), slice_word(f.im, params))


def reassemble_complex(s: SlicedComplex) -> ComplexFixed:
    """Component-wise inverse of slice_complex."""
    return ComplexFixed(reassemble(s.re), reassemble(s.im))
