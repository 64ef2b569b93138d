#!/usr/bin/env python3
"""One multiply, no multiplier: block tables and shift-adds, step by step.

A twiddle factor is a constant, so every partial product d * w_raw for a
4-bit digit d can be precomputed into a 16-entry table. A 16-bit
multiplicand then costs four lookups and three shift-adds, and one
rescale puts the result on the same bit as a conventional Q1.15
multiply. The two paths agree bit for bit, which this script checks on
a sweep at the end.
"""

from dsfft import (
    Fixed16,
    Twiddle,
    make_block_tables,
    slice_word,
    mul_raw,
    mul_slicing_raw,
    sliced_product_acc,
)

w = Twiddle(Fixed16(0x5A82), Fixed16(0x5A82))  # cos/sin of pi/4
tables = make_block_tables(w)

print("low table T[d] = d * 23170 for unsigned digits d:")
for d in (0, 1, 2, 15):
    print(f"  T[{d:2d}] = {tables.wr_low[d]:7d}")
print("top table is sign corrected, digit patterns >= 8 weigh d - 16:")
for d in (7, 8, 15):
    print(f"  T[{d:2d}] = {tables.wr_top[d]:7d}")
print()

# walk one multiplicand through the datapath by hand
x = Fixed16.from_real(-0.6789)
blocks = slice_word(x).blocks
print(f"x = {x.to_real():+.6f}, raw {x.raw}, blocks (LSB first) {blocks}")

acc = 0
for k, d in enumerate(blocks):
    table = tables.wr_top if k == len(blocks) - 1 else tables.wr_low
    part = table[d & 0xF] << (4 * k)
    acc += part
    print(f"  block {k}: digit {d:3d} -> T[{d & 0xF:2d}] << {4 * k:2d} = {part:12d}")
print(f"accumulator {acc} == x.raw * w.raw {x.raw * w.wr.raw}: "
      f"{acc == x.raw * w.wr.raw}")

assert acc == sliced_product_acc(x.raw, tables.wr_low, tables.wr_top, 4, 4)

got = mul_slicing_raw(x.raw, tables.wr_low, tables.wr_top, 4, 4, True)
want = mul_raw(x.raw, w.wr.raw, True)
print(f"after the 15-bit rescale: slicing {got}, conventional {want}")
print()

# the agreement is not a sampling artifact: sweep every multiplicand
mismatches = sum(
    1 for raw in range(-32768, 32768)
    if mul_slicing_raw(raw, tables.wr_low, tables.wr_top, 4, 4, True)
    != mul_raw(raw, w.wr.raw, True))
print(f"all 65536 multiplicands against 0x5A82: {mismatches} mismatches")
