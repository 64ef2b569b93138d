"""Q1.15 primitive testbench: frozen examples plus exhaustive sweeps."""

import random

import numpy as np
import pytest

from dsfft.fixedpoint import (
    RAW_MAX,
    RAW_MIN,
    ComplexFixed,
    Fixed16,
    OverflowMode,
    RoundingMode,
    add_raw,
    mul_raw,
    q15_add,
    q15_mul,
    q15_sub,
    scale_half,
    wrap_raw,
)

NEAREST = RoundingMode.NEAREST_HALF_UP
TRUNC = RoundingMode.TRUNCATE
SAT = OverflowMode.SATURATE
WRAP = OverflowMode.WRAP


def test_from_real_examples():
    assert Fixed16.from_real(0.0).raw == 0x0000
    assert Fixed16.from_real(1.0).raw == 0x7FFF
    assert Fixed16.from_real(-1.0).raw == -0x8000
    assert Fixed16.from_real(0.70710678).raw == 0x5A82
    assert Fixed16.from_real(2.5).raw == 0x7FFF
    assert Fixed16.from_real(-3.0).raw == -0x8000


def test_from_real_rejects_non_finite():
    for bad in (float("nan"), float("inf"), float("-inf")):
        with pytest.raises(ValueError):
            Fixed16.from_real(bad)


def test_to_real_examples():
    assert Fixed16(0x4000).to_real() == 0.5
    assert Fixed16(-0x8000).to_real() == -1.0
    assert Fixed16(0x2000).to_real() == 0.25


def test_raw_range_enforced():
    with pytest.raises(ValueError):
        Fixed16(0x8000)
    with pytest.raises(ValueError):
        Fixed16(-0x8001)


def test_add_examples():
    assert q15_add(Fixed16(0x4000), Fixed16(0x2000)).raw == 0x6000
    assert q15_add(Fixed16(0x7FFF), Fixed16(0x0001)).raw == 0x7FFF
    assert q15_add(Fixed16(0x7FFF), Fixed16(0x0001), WRAP).raw == -0x8000


def test_sub_examples():
    assert q15_sub(Fixed16(0x4000), Fixed16(0x2000)).raw == 0x2000
    assert q15_sub(Fixed16(-0x8000), Fixed16(0x0001)).raw == -0x8000
    assert q15_sub(Fixed16(0x0000), Fixed16(-0x8000)).raw == 0x7FFF


def test_mul_examples():
    assert q15_mul(Fixed16(0x4000), Fixed16(0x4000)).raw == 0x2000
    assert q15_mul(Fixed16(-0x8000), Fixed16(-0x8000)).raw == 0x7FFF
    # round(23170^2 / 2^15) = round(16384.31) = 16384? No: 23170^2 = 536848900,
    # /32768 = 16383.27 -> 16383 under nearest.
    assert q15_mul(Fixed16(0x5A82), Fixed16(0x5A82)).raw == 16383


def test_scale_half_examples():
    assert scale_half(Fixed16(0x4000)).raw == 0x2000
    assert scale_half(Fixed16(0x0001), TRUNC).raw == 0x0000
    assert scale_half(Fixed16(-1), TRUNC).raw == -1  # arithmetic shift keeps sign
    assert scale_half(Fixed16(-1), NEAREST).raw == 0
    assert scale_half(Fixed16(0x0001), NEAREST).raw == 1


def test_roundtrip_exhaustive_all_raws():
    # to_real then from_real is the identity for every 16-bit word
    for raw in range(RAW_MIN, RAW_MAX + 1):
        assert Fixed16.from_real(Fixed16(raw).to_real()).raw == raw


def test_from_real_quantization_error_bound():
    rng = random.Random(0xF1)
    for _ in range(20000):
        v = rng.uniform(-0.99997, 0.99997)
        assert abs(Fixed16.from_real(v).to_real() - v) <= 2.0 ** -16


def _mul8(a: int, b: int, nearest: bool) -> int:
    # same rescale rule instantiated at 8 bits (Q1.7)
    p = a * b
    if nearest:
        p += 1 << 6
    r = p >> 7
    return max(-128, min(127, r))


def test_mul_commutative_8bit_exhaustive():
    for a in range(-128, 128):
        for b in range(a, 128):
            assert _mul8(a, b, True) == _mul8(b, a, True)
            assert _mul8(a, b, False) == _mul8(b, a, False)


def test_mul_commutative_random_pairs():
    # 10^7 pairs through the published rescale rule on wide integers, plus
    # a 10^5 sample through q15_mul itself
    rng = np.random.default_rng(0xC0)
    a = rng.integers(RAW_MIN, RAW_MAX + 1, size=10_000_000, dtype=np.int64)
    b = rng.integers(RAW_MIN, RAW_MAX + 1, size=10_000_000, dtype=np.int64)
    ab = np.clip((a * b + (1 << 14)) >> 15, RAW_MIN, RAW_MAX)
    ba = np.clip((b * a + (1 << 14)) >> 15, RAW_MIN, RAW_MAX)
    assert np.array_equal(ab, ba)
    pyrng = random.Random(0xC1)
    for _ in range(100_000):
        x = pyrng.randrange(RAW_MIN, RAW_MAX + 1)
        y = pyrng.randrange(RAW_MIN, RAW_MAX + 1)
        assert mul_raw(x, y) == mul_raw(y, x)


def test_mul_identities_exhaustive():
    # q15_mul(x, 0) = 0 and q15_mul(x, 0.5) = scale_half(x) for every x
    for raw in range(RAW_MIN, RAW_MAX + 1):
        assert mul_raw(raw, 0) == 0
        assert mul_raw(raw, 0x4000) == (raw + 1) >> 1
        assert mul_raw(raw, 0x4000, nearest=False) == raw >> 1


def test_mul_identities_via_wrappers():
    for raw in (-0x8000, -1, 0, 1, 0x2000, 0x7FFF):
        x = Fixed16(raw)
        assert q15_mul(x, Fixed16(0)).raw == 0
        assert q15_mul(x, Fixed16(0x4000)) == scale_half(x)
        assert q15_mul(x, Fixed16(0x4000), TRUNC) == scale_half(x, TRUNC)


def test_add_saturate_stays_in_range():
    rng = random.Random(0xAD)
    for _ in range(100_000):
        a = rng.randrange(RAW_MIN, RAW_MAX + 1)
        b = rng.randrange(RAW_MIN, RAW_MAX + 1)
        assert RAW_MIN <= add_raw(a, b) <= RAW_MAX


def test_nearest_rescale_error_bound():
    rng = random.Random(0x4E)
    for _ in range(50_000):
        a = rng.randrange(RAW_MIN, RAW_MAX + 1)
        b = rng.randrange(RAW_MIN, RAW_MAX + 1)
        if a == RAW_MIN and b == RAW_MIN:
            continue  # the lone saturating product
        got = mul_raw(a, b) / 32768.0
        exact = (a / 32768.0) * (b / 32768.0)
        assert abs(got - exact) <= 2.0 ** -16


def test_wrap_raw_is_mod_2_16():
    assert wrap_raw(0x8000) == -0x8000
    assert wrap_raw(-0x8001) == 0x7FFF
    assert wrap_raw(0x18000) == -0x8000
    for v in range(-70000, 70000, 777):
        w = wrap_raw(v)
        assert RAW_MIN <= w <= RAW_MAX
        assert (w - v) % 65536 == 0


def test_hex_roundtrip():
    assert Fixed16(0x5A82).to_hex() == "5A82"
    assert Fixed16(-0x8000).to_hex() == "8000"
    assert Fixed16(-1).to_hex() == "FFFF"
    for raw in range(RAW_MIN, RAW_MAX + 1, 257):
        x = Fixed16(raw)
        assert Fixed16.from_hex(x.to_hex()) == x
    with pytest.raises(ValueError):
        Fixed16.from_hex("5A8")
    with pytest.raises(ValueError):
        Fixed16.from_hex("5A82F")
    with pytest.raises(ValueError):
        Fixed16.from_hex("ZZZZ")


def test_complex_fixed_equality_and_conjugate():
    a = ComplexFixed.from_raws(0x1234, -0x0002)
    assert a == ComplexFixed.from_raws(0x1234, -0x0002)
    assert a != ComplexFixed.from_raws(0x1234, -0x0001)
    assert a.conjugate().im.raw == 0x0002
    # conjugating -1 saturates rather than wrapping
    assert ComplexFixed.from_raws(0, -0x8000).conjugate().im.raw == 0x7FFF
    z = ComplexFixed.from_complex(0.5 - 0.25j)
    assert (z.re.raw, z.im.raw) == (0x4000, -0x2000)
    assert z.to_complex() == 0.5 - 0.25j
