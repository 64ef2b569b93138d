"""FFT engine testbench: structure, exactness fixtures, backend agreement."""

import math
import random

import pytest

from dsfft.butterfly import DatapathConfig, OpCounts, ScalingMode
from dsfft.engine import (
    Backend,
    BackendComparison,
    FftPlan,
    Signal,
    Spectrum,
    _reverse_bits,
    bit_reverse_permute,
    fft,
    fft_both_backends,
    ifft,
    impulse,
    plan,
    random_signal,
)
from dsfft.fixedpoint import ComplexFixed, Fixed16, OverflowMode, RoundingMode
from dsfft.twiddle import make_rom

ULP = 2.0 ** -15

CFG_HALF = DatapathConfig()
CFG_NONE = DatapathConfig(scaling=ScalingMode.NONE)
CFG_TRUNC = DatapathConfig(rounding=RoundingMode.TRUNCATE)
CFG_NONE_WRAP = DatapathConfig(overflow=OverflowMode.WRAP, scaling=ScalingMode.NONE)


def raw_signal(raws):
    return Signal(tuple(ComplexFixed.from_raws(r, i) for r, i in raws))


def ramp_signal(n):
    # distinguishable samples for permutation checks
    return raw_signal((k, -k) for k in range(n))


def test_reverse_bits_examples():
    assert [_reverse_bits(i, 3) for i in range(8)] == [0, 4, 2, 6, 1, 5, 3, 7]
    assert _reverse_bits(1, 10) == 512
    assert _reverse_bits(0, 1) == 0


def test_bit_reverse_permute_examples():
    out = bit_reverse_permute(ramp_signal(8))
    assert [s.re.raw for s in out.samples] == [0, 4, 2, 6, 1, 5, 3, 7]
    out2 = bit_reverse_permute(ramp_signal(2))
    assert [s.re.raw for s in out2.samples] == [0, 1]


def test_bit_reverse_permute_is_involution():
    for n in (2, 4, 8, 64, 512, 4096):
        sig = ramp_signal(n)
        assert bit_reverse_permute(bit_reverse_permute(sig)) == sig


def test_plan_examples():
    pc = plan(8, Backend.CONVENTIONAL)
    assert pc.n == 8 and pc.rom.n == 8 and len(pc.rom.entries) == 4
    assert pc.tables is None

    ps = plan(8)
    assert ps.backend is Backend.DIGIT_SLICING
    assert ps.tables is not None and len(ps.tables) == 4
    for table, entry in zip(ps.tables, ps.rom.entries):
        assert table.twiddle == entry
        assert table.params == ps.cfg.slice_params


def test_plan_rejects_bad_sizes():
    for n in (0, 1, 6, 384):
        with pytest.raises(ValueError):
            plan(n)


def test_plan_validation():
    cfg = DatapathConfig()
    with pytest.raises(ValueError):
        FftPlan(n=8, backend=Backend.CONVENTIONAL, cfg=cfg, rom=make_rom(4), tables=None)
    with pytest.raises(ValueError):
        FftPlan(n=8, backend=Backend.DIGIT_SLICING, cfg=cfg, rom=make_rom(8), tables=None)
    good = plan(8)
    with pytest.raises(ValueError):
        FftPlan(n=8, backend=Backend.CONVENTIONAL, cfg=cfg, rom=make_rom(8),
                tables=good.tables)


def test_signal_validation():
    with pytest.raises(ValueError):
        Signal(())
    with pytest.raises(ValueError):
        Signal((ComplexFixed.from_raws(0, 0),))
    with pytest.raises(ValueError):
        Signal(tuple(ComplexFixed.from_raws(0, 0) for _ in range(6)))
    with pytest.raises(ValueError):
        fft(plan(8), ramp_signal(16))


def test_signal_from_complex_quantizes():
    sig = Signal.from_complex([0.70710678 + 0.5j, -1.0 - 1.0j])
    assert (sig.samples[0].re.raw, sig.samples[0].im.raw) == (0x5A82, 0x4000)
    assert (sig.samples[1].re.raw, sig.samples[1].im.raw) == (-0x8000, -0x8000)


def test_impulse_fixture():
    sig = impulse(8)
    assert sig.n == 8
    assert sig.samples[0].re.raw == 0x4000
    assert all(s.re.raw == 0 and s.im.raw == 0 for s in sig.samples[1:])
    assert impulse(4, amplitude=0.25).samples[0].re.raw == 0x2000


def test_impulse_spectrum_is_exact():
    # an impulse meets no rounding: every halving stage is exact, so each
    # bin is exactly amplitude / N
    for n, want in ((4, 0x1000), (8, 0x0800), (64, 0x0100)):
        spec = fft(plan(n), impulse(n))
        assert spec.scale_log2 == int(math.log2(n))
        assert all(b.re.raw == want and b.im.raw == 0 for b in spec.bins)


def test_dc_spectrum_is_exact_under_nearest():
    # constant 0.25: bin 0 holds the mean exactly, the rest cancel to zero
    sig = Signal.from_complex([0.25] * 8)
    spec = fft(plan(8), sig)
    assert spec.bins[0].re.raw == 0x2000 and spec.bins[0].im.raw == 0
    assert all(b.re.raw == 0 and b.im.raw == 0 for b in spec.bins[1:])


def test_two_point_transform_is_half_sum_and_difference():
    rng = random.Random(0x2B1A)
    pl = plan(2)
    for _ in range(500):
        ar, ai = rng.randint(-20000, 20000), rng.randint(-20000, 20000)
        br, bi = rng.randint(-20000, 20000), rng.randint(-20000, 20000)
        spec = fft(pl, raw_signal([(ar, ai), (br, bi)]))
        assert abs(spec.bins[0].re.raw - (ar + br + 1) // 2) <= 1
        assert abs(spec.bins[0].im.raw - (ai + bi + 1) // 2) <= 1
        assert abs(spec.bins[1].re.raw - (ar - br + 1) // 2) <= 1
        assert abs(spec.bins[1].im.raw - (ai - bi + 1) // 2) <= 1


def test_scale_log2_reflects_scaling_mode():
    sig = impulse(16)
    assert fft(plan(16, cfg=CFG_HALF), sig).scale_log2 == 4
    assert fft(plan(16, cfg=CFG_NONE), sig).scale_log2 == 0
    assert fft(plan(16, Backend.CONVENTIONAL, CFG_NONE), sig).scale_log2 == 0


def test_backends_bit_identical_across_sizes_and_configs():
    rng = random.Random(0xB17E)
    cfgs = (CFG_HALF, CFG_TRUNC, CFG_NONE, CFG_NONE_WRAP,
            DatapathConfig(rounding=RoundingMode.TRUNCATE, overflow=OverflowMode.WRAP,
                           scaling=ScalingMode.NONE))
    for n in (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024):
        sig = random_signal(n, rng)
        cmp = fft_both_backends(n, sig, cfgs[int(math.log2(n)) % len(cfgs)])
        assert cmp.conventional == cmp.digit_slicing
    big = fft_both_backends(4096, random_signal(4096, rng))
    assert big.conventional == big.digit_slicing


def test_counts_for_n64():
    cmp = fft_both_backends(64, impulse(64))
    # 192 butterflies: (64/2) * log2(64)
    assert cmp.conventional_counts.as_dict() == {
        "real_multiplies": 768, "real_adds": 1152,
        "table_lookups": 0, "shifts": 0}
    assert cmp.digit_slicing_counts.as_dict() == {
        "real_multiplies": 0, "real_adds": 1152,
        "table_lookups": 3072, "shifts": 2304}


def test_counts_accumulate_across_calls():
    pl = plan(8)
    counts = OpCounts()
    fft(pl, impulse(8), counts)
    fft(pl, impulse(8), counts)
    assert counts.table_lookups == 2 * 16 * 12  # 12 butterflies per 8-point run


def test_transform_is_deterministic():
    rng = random.Random(0xD37E)
    sig = random_signal(256, rng)
    a = fft(plan(256), sig)
    b = fft(plan(256), sig)
    assert a == b


def test_linearity_within_rounding_budget():
    # z = x/2 + y/4 built exactly on raws (multiples of 4), so any output
    # mismatch is pure datapath rounding
    rng = random.Random(0x11EA)
    for n in (16, 64, 256):
        tol = 4 * math.log2(n) * ULP
        xs = [(rng.randint(-7000, 7000) * 4, rng.randint(-7000, 7000) * 4)
              for _ in range(n)]
        ys = [(rng.randint(-7000, 7000) * 4, rng.randint(-7000, 7000) * 4)
              for _ in range(n)]
        zs = [(xr // 2 + yr // 4, xi // 2 + yi // 4)
              for (xr, xi), (yr, yi) in zip(xs, ys)]
        pl = plan(n)
        fx = fft(pl, raw_signal(xs)).to_complex()
        fy = fft(pl, raw_signal(ys)).to_complex()
        fz = fft(pl, raw_signal(zs)).to_complex()
        worst = max(abs(z - (x / 2 + y / 4)) for z, x, y in zip(fz, fx, fy))
        assert worst <= tol, (n, worst, tol)


def test_parseval_energy_ratio():
    # with the 1/N spectrum convention: N * sum|X|^2 ~= sum|x|^2 / 1
    rng = random.Random(0x9A55)
    for n in (64, 256, 1024):
        sig = random_signal(n, rng)
        spec = fft(plan(n), sig)
        e_time = sum(abs(v) ** 2 for v in sig.to_complex())
        e_freq = n * sum(abs(v) ** 2 for v in spec.to_complex())
        assert abs(e_freq - e_time) <= 0.002 * e_time, (n, e_freq, e_time)


def test_one_hot_inputs_trace_the_twiddle_circle():
    # x[m] = 0.5 -> bin k is 0.5/N * exp(-2j pi m k / N) up to rounding
    for n, m in ((4, 1), (16, 3), (64, 9), (64, 32)):
        raws = [(0, 0)] * n
        raws[m] = (0x4000, 0)
        spec = fft(plan(n), raw_signal(raws))
        tol = 2 * math.log2(n) * ULP
        for k, got in enumerate(spec.to_complex()):
            want = 0.5 / n * complex(math.cos(2 * math.pi * m * k / n),
                                     -math.sin(2 * math.pi * m * k / n))
            assert abs(got - want) <= tol, (n, m, k)


def test_ifft_inverts_fft_up_to_scale():
    rng = random.Random(0x1FF7)
    for n in (8, 64, 256):
        sig = random_signal(n, rng)
        pl = plan(n)
        spec = fft(pl, sig)
        back = ifft(pl, Signal(spec.bins))
        tol = 2 * math.log2(n) * 2.0 ** -14
        worst = max(abs(b - s / n)
                    for b, s in zip(back.to_complex(), sig.to_complex()))
        assert worst <= tol, (n, worst, tol)


def test_ifft_of_flat_spectrum_concentrates():
    # inverse of the impulse's flat spectrum puts everything back in x[0]
    n = 16
    pl = plan(n)
    flat = fft(pl, impulse(n))
    back = ifft(pl, Signal(flat.bins))
    assert back.bins[0].re.raw == 0x4000 >> 4  # amplitude/n, the x/N convention
    assert all(b.re.raw == 0 and b.im.raw == 0 for b in back.bins[1:])


def test_random_signal_respects_limit():
    rng = random.Random(0x11F1)
    sig = random_signal(1024, rng, limit=0.9)
    lim = int(0.9 * 32768) + 1
    for s in sig.samples:
        assert abs(s.re.raw) <= lim and abs(s.im.raw) <= lim


def test_backend_comparison_shape():
    cmp = fft_both_backends(8, impulse(8))
    assert isinstance(cmp, BackendComparison)
    assert isinstance(cmp.conventional, Spectrum)
    assert cmp.digit_slicing.n == 8
