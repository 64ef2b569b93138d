#!/usr/bin/env python3
"""Transform a two-tone signal and compare against the floating DFT.

The engine halves at every stage, so the stored spectrum approximates
DFT/N and Spectrum.scale_log2 records the shifts. The oracle comparison
rescales before differencing. A magnitude plot of both spectra lands in
fft_vs_oracle.png next to this script.
"""

import math
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from dsfft import Signal, compare, dft_reference, fft, plan

N = 256
t = np.arange(N)
x = (0.60 * np.sin(2 * np.pi * 17 * t / N)
     + 0.33 * np.cos(2 * np.pi * 63 * t / N)
     + 0.05 * np.cos(2 * np.pi * 90 * t / N))

sig = Signal.from_complex(x)  # quantizes to Q1.15
spec = fft(plan(N), sig)
print(f"scale_log2 = {spec.scale_log2} (stored bins are DFT/{1 << spec.scale_log2})")

ref = dft_reference(sig.to_complex())
rep = compare(spec, ref)
print(f"max |error|  {rep.max_abs_err:.3e} at bin {rep.worst_bin}")
print(f"rms  error   {rep.rms_err:.3e}")
print(f"SQNR         {rep.sqnr_db:.1f} dB")

budget = math.log2(N) * 2.0 ** -14 * (1 << spec.scale_log2)
print(f"error budget {budget:.3e} (log2(N) * 2^-14, reference scale): "
      f"{'within' if rep.max_abs_err <= budget else 'OVER'}")

fixed = np.abs(np.array(spec.to_complex())) * (1 << spec.scale_log2)
exact = np.abs(ref.bins)

fig, (ax0, ax1) = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
ax0.plot(exact, lw=1.0, label="floating DFT")
ax0.plot(fixed, lw=0.8, ls="--", label="Q1.15 FFT (rescaled)")
ax0.set_ylabel("|X(k)|")
ax0.legend()
ax1.semilogy(np.abs(fixed - exact) + 1e-12, lw=0.8, color="crimson")
ax1.axhline(budget, color="gray", ls=":", label="error budget")
ax1.set_xlabel("bin")
ax1.set_ylabel("abs error")
ax1.legend()
fig.tight_layout()

out = pathlib.Path(__file__).with_name("fft_vs_oracle.png")
fig.savefig(out, dpi=120)
print(f"wrote {out}")
