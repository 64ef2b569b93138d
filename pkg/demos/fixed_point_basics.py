#!/usr/bin/env python3
"""Tour of the Q1.15 word and the digit-slicing decompositions.

Everything in the datapath is a 16-bit two's-complement integer scaled
by 2^-15. This script walks the value range, the rounding and overflow
behavior, and how a word splits into 4-bit blocks (and a 17-bit word
into a sign block plus four blocks).
"""

from dsfft import (
    Fixed16,
    ComplexFixed,
    OverflowMode,
    RoundingMode,
    q15_add,
    q15_mul,
    scale_half,
    slice_word,
    reassemble,
    slice_odd,
    slice_complex,
)

# quantization: reals land on the nearest multiple of 2^-15
for v in (0.0, 0.5, -0.75, 0.70710678, 1.0, -1.0, 2.5):
    f = Fixed16.from_real(v)
    print(f"from_real({v:+.8f}) -> raw {f.raw:6d} = 0x{f.raw & 0xFFFF:04X} "
          f"-> {f.to_real():+.8f}")
print()

# 1.0 is not representable: it saturates to 0x7FFF, one ulp below
one = Fixed16.from_real(1.0)
print(f"largest value: {one.to_real():.10f} (1 - 2^-15), hex {one.to_hex()}")
print(f"most negative: {Fixed16.from_real(-1.0).to_real():+.1f}, "
      f"hex {Fixed16.from_real(-1.0).to_hex()}")
print()

# multiply rescales the 30-bit product once; rounding mode matters
a = Fixed16.from_real(0.25)
b = Fixed16(0x7FFF)
print(f"0.25 * (1-ulp) nearest: raw {q15_mul(a, b).raw}")
print(f"0.25 * (1-ulp) trunc:   raw {q15_mul(a, b, RoundingMode.TRUNCATE).raw}")

# addition saturates by default, wraps on request
big = Fixed16.from_real(0.9)
print(f"0.9 + 0.9 saturate: {q15_add(big, big).to_real():+.6f}")
print(f"0.9 + 0.9 wrap:     {q15_add(big, big, OverflowMode.WRAP).to_real():+.6f}")
print(f"scale_half(-1 ulp) nearest rounds up: {scale_half(Fixed16(-1)).raw}")
print()

# even scheme: 16 bits as four 4-bit blocks, LSB block first, top signed
for raw in (0x7FFF, 0x5A82, -0x8000, -1):
    s = slice_word(Fixed16(raw))
    print(f"slice_word(0x{raw & 0xFFFF:04X}) blocks {s.blocks}  render {s}")
    assert reassemble(s).raw == raw
print()

# odd scheme: a 17-bit accumulator word, sign block plus four magnitude
# blocks read MSB first
for raw in (-65536, -32768, 12345, 65535):
    s = slice_odd(raw)
    print(f"slice_odd({raw:6d}) sign {s.sign_block:2d} blocks {s.blocks}  render {s}")
print()

# complex samples slice per component
c = ComplexFixed.from_complex(0.5 - 0.25j)
sc = slice_complex(c)
print(f"complex {c.to_complex()} -> re {sc.re.blocks} im {sc.im.blocks}")
