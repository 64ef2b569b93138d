#!/usr/bin/env python3
"""What does dropping the multipliers cost? Count every operation.

Both backends are run on the same signals. The conventional butterfly
spends 4 real multiplies per complex product; the digit-slicing one
spends 16 table lookups and 12 shift-adds instead, and its multiply
count must be exactly zero. Spectra are asserted bit-identical while we
are at it.
"""

import random
import time

from dsfft import Backend, OpCounts, fft, fft_both_backends, plan, random_signal

rng = random.Random(0x0C0DE)

print(f"{'n':>6} {'mults(conv)':>12} {'mults(slice)':>13} "
      f"{'lookups':>9} {'shifts':>8} {'adds':>8} {'conv_ms':>8} {'slice_ms':>9}")

for n in (8, 32, 128, 512, 2048):
    sig = random_signal(n, rng)
    res = fft_both_backends(n, sig)
    assert res.conventional == res.digit_slicing  # bit-exact agreement
    conv, slc = res.conventional_counts, res.digit_slicing_counts
    assert slc.real_multiplies == 0

    # wall time per backend on prebuilt plans; counts are the real story,
    # a software model does not show the hardware area/speed win
    pc = plan(n, Backend.CONVENTIONAL)
    ps = plan(n, Backend.DIGIT_SLICING)
    t0 = time.perf_counter()
    fft(pc, sig, OpCounts())
    t1 = time.perf_counter()
    fft(ps, sig, OpCounts())
    t2 = time.perf_counter()

    print(f"{n:>6} {conv.real_multiplies:>12} {slc.real_multiplies:>13} "
          f"{slc.table_lookups:>9} {slc.shifts:>8} {slc.real_adds:>8} "
          f"{1000 * (t1 - t0):>8.2f} {1000 * (t2 - t1):>9.2f}")

print()
n_bf = lambda n: (n // 2) * (n.bit_length() - 1)
print("identities: mults(conv) = 4*(N/2)*log2N, lookups = 16*(N/2)*log2N")
print(f"check at N=512: {4 * n_bf(512)} and {16 * n_bf(512)}")
