"""Logarithmic morphology: worked examples, extremes, both implementations."""

from fractions import Fraction

import numpy as np
import pytest

from logmorph import (
    DEFAULT_M,
    StructuringFunction,
    check_duality,
    closing,
    dilation,
    erosion,
    flat_sf,
    log_closing,
    log_dilation,
    log_erosion,
    log_gradient,
    log_opening,
    negative_image,
    opening,
)

M = DEFAULT_M

# b(0) = 128, b(1) = 64 on the x axis
B = StructuringFunction(np.array([[0, 0], [1, 0]]), np.array([128.0, 64.0]), "logarithmic")


def test_log_dilation_worked_example():
    f = np.array([100.0, 208.0])
    # [DERIVED] via exact rationals: sup of f(x-h) (+) b(h)
    #   x=0: 100 (+) 128 = 228 - 12800/256 = 178
    #   x=1: max(208 (+) 128, 100 (+) 64) = max(232, 139) = 232
    for impl in ("direct", "isomorphism"):
        out = log_dilation(f, B, impl=impl)
        assert out == pytest.approx([178.0, 232.0], rel=0, abs=1e-12)
    assert np.array_equal(log_dilation(f, B, impl="direct"), [178.0, 232.0])


def test_log_erosion_worked_example():
    f = np.array([100.0, 208.0])
    # [DERIVED] inf of f(x+h) (-) b(h):
    #   x=0: min(100 (-) 128, 208 (-) 64) = min(-56, 192) = -56
    #   x=1: 208 (-) 128 = 80*256/128 = 160
    for impl in ("direct", "isomorphism"):
        out = log_erosion(f, B, impl=impl)
        assert out == pytest.approx([-56.0, 160.0], rel=0, abs=1e-12)
    assert np.array_equal(log_erosion(f, B, impl="direct"), [-56.0, 160.0])


def test_log_gradient_worked_example():
    f = np.array([100.0, 208.0])
    # [DERIVED] (d - e) * M / (M - e): both pixels give exactly 192
    for impl in ("direct", "isomorphism"):
        assert log_gradient(f, B, impl=impl) == pytest.approx([192.0, 192.0], rel=0, abs=1e-12)


def test_micro_examples():
    f = np.array([0.0, 128.0, 0.0])
    bump = StructuringFunction(np.array([[0, 0]]), np.array([64.0]), "logarithmic")
    for impl in ("direct", "isomorphism"):
        # 128 (+) 64 = 192 - 8192/256 = 160; 0 (+) 64 = 64
        assert log_dilation(f, bump, impl=impl) == pytest.approx([64.0, 160.0, 64.0], abs=1e-12)
        # (f - 64)/(1 - 64/256) = (f - 64) * 4/3
        assert log_erosion(f, bump, impl=impl) == pytest.approx(
            [-256.0 / 3.0, 256.0 / 3.0, -256.0 / 3.0], abs=1e-12
        )


def test_gradient_step_example():
    step = np.array([0.0, 0.0, 128.0, 128.0])
    b = flat_sf(1.0, kind="logarithmic")
    for impl in ("direct", "isomorphism"):
        # edge pixels: (128 - 0) * 256/256 = 128; flats: 0
        assert log_gradient(step, b, impl=impl) == pytest.approx(
            [0.0, 128.0, 128.0, 0.0], abs=1e-12
        )


def test_sup_inf_commutation():
    rng = np.random.default_rng(53)
    b = StructuringFunction(np.array([[0, 0], [1, 0], [-1, 1]]), np.array([30.0, 100.0, -20.0]), "logarithmic")
    for _ in range(20):
        f = rng.uniform(-100.0, 255.5, size=(8, 8))
        g = rng.uniform(-100.0, 255.5, size=(8, 8))
        for impl in ("direct", "isomorphism"):
            assert np.allclose(
                log_dilation(np.maximum(f, g), b, impl=impl),
                np.maximum(log_dilation(f, b, impl=impl), log_dilation(g, b, impl=impl)),
                atol=1e-9,
            )
            assert np.allclose(
                log_erosion(np.minimum(f, g), b, impl=impl),
                np.minimum(log_erosion(f, b, impl=impl), log_erosion(g, b, impl=impl)),
                atol=1e-9,
            )


def test_duality_requires_reflection():
    # asymmetric single-offset sf: the dual pairing only closes after
    # reflecting the structuring function
    f = np.array([10.0, 100.0, 40.0])
    b = StructuringFunction(np.array([[1, 0]]), np.array([50.0]), "logarithmic")
    gaps = check_duality(f, b)
    assert gaps.max_gap <= 1e-9
    neg = negative_image(f)
    unreflected = negative_image(log_dilation(neg, b))
    with np.errstate(invalid="ignore"):
        mismatch = np.where(
            unreflected == log_erosion(f, b), 0.0, np.abs(unreflected - log_erosion(f, b))
        )
    assert np.max(mismatch) > 1.0


def test_fraction_oracle_random():
    rng = np.random.default_rng(5)
    m = Fraction(256)

    def f_add(a, b):
        return a + b - a * b / m

    def f_sub(a, b):
        return (a - b) / (1 - b / m)

    for _ in range(30):
        f = [Fraction(round(v, 4)).limit_denominator(10**6) for v in rng.uniform(-200, 255, 5)]
        bv = [Fraction(round(v, 4)).limit_denominator(10**6) for v in rng.uniform(-50, 200, 2)]
        arr = np.array([float(v) for v in f])
        b = StructuringFunction(
            np.array([[0, 0], [1, 0]]), np.array([float(v) for v in bv]), "logarithmic"
        )
        # exact-rational references for both operators
        exp_dil = []
        exp_ero = []
        n = len(f)
        for x in range(n):
            dil_c = [f_add(f[x - h], bv[h]) for h in range(2) if 0 <= x - h < n]
            ero_c = [f_sub(f[x + h], bv[h]) for h in range(2) if 0 <= x + h < n]
            exp_dil.append(float(max(dil_c)))
            exp_ero.append(float(min(ero_c)))
        for impl in ("direct", "isomorphism"):
            assert log_dilation(arr, b, impl=impl) == pytest.approx(exp_dil, rel=1e-9, abs=1e-9)
            assert log_erosion(arr, b, impl=impl) == pytest.approx(exp_ero, rel=1e-9, abs=1e-9)


def test_lattice_extremes_absorb():
    f = np.array([-np.inf, M, 50.0])
    b = StructuringFunction(np.array([[0, 0], [1, 0]]), np.array([0.0, 10.0]), "logarithmic")
    for impl in ("direct", "isomorphism"):
        d = log_dilation(f, b, impl=impl)
        assert np.isneginf(d[0])           # only the -inf sample reaches x=0
        assert d[1] == M                   # M absorbs: M (+) 0
        assert d[2] == M                   # M (+) 10 propagated from x=1
        e = log_erosion(f, b, impl=impl)
        assert np.isneginf(e[0])           # -inf (-) 0
        # x=1 takes the min of M (-) 0 and 50 (-) 10 = 40*256/246
        assert e[1] == pytest.approx(5120.0 / 123.0, rel=0, abs=1e-12)
        assert e[2] == 50.0
        # a window consisting solely of M samples erodes to M exactly
        allm = log_erosion(np.array([M, M]), b, impl=impl)
        assert np.all(allm == M)


def test_implementations_agree():
    rng = np.random.default_rng(31)
    for _ in range(30):
        f = rng.uniform(-300.0, 255.9, size=(12, 12))
        offsets = np.unique(rng.integers(-2, 3, size=(4, 2)), axis=0)
        b = StructuringFunction(offsets, rng.uniform(-64, 250, size=len(offsets)), "logarithmic")
        for log_op in (log_dilation, log_erosion, log_opening, log_closing):
            a = log_op(f, b, impl="direct")
            c = log_op(f, b, impl="isomorphism")
            both_inf = np.isneginf(a) & np.isneginf(c)
            assert np.array_equal(np.isneginf(a), np.isneginf(c))
            assert np.allclose(a[~both_inf], c[~both_inf], rtol=0, atol=1e-6)


def test_degenerate_flat_zero_equals_classical():
    rng = np.random.default_rng(37)
    f = rng.integers(0, 256, size=(14, 14)).astype(float)
    b_log = flat_sf(1.5, kind="logarithmic")
    b_add = flat_sf(1.5, kind="additive")
    assert np.array_equal(log_dilation(f, b_log, impl="direct"), dilation(f, b_add))
    assert np.array_equal(log_erosion(f, b_log, impl="direct"), erosion(f, b_add))
    assert np.array_equal(log_opening(f, b_log, impl="direct"), opening(f, b_add))
    assert np.array_equal(log_closing(f, b_log, impl="direct"), closing(f, b_add))


def test_range_law():
    # classical dilation can overshoot M, the logarithmic one cannot
    f = np.full((5, 5), 250.0)
    b_add = StructuringFunction(np.array([[0, 0]]), np.array([100.0]), "additive")
    b_log = StructuringFunction(np.array([[0, 0]]), np.array([100.0]), "logarithmic")
    assert np.all(dilation(f, b_add) == 350.0)
    out = log_dilation(f, b_log)
    assert np.all(out < M)
    assert np.all(out > 250.0)


def test_negative_image_involution():
    f = np.array([0.0, 64.0, 128.0, -np.inf, M])
    out = negative_image(f)
    assert out[0] == 0.0
    assert out[3] == M and np.isneginf(out[4])
    assert np.array_equal(negative_image(out), f)


def test_duality_small():
    rng = np.random.default_rng(41)
    f = rng.uniform(-200.0, 255.0, size=(10, 10))
    b = StructuringFunction(
        np.array([[0, 0], [1, 0], [0, 1], [-1, 1]]),
        np.array([10.0, -30.0, 200.0, 55.0]),
        "logarithmic",
    )
    for impl in ("direct", "isomorphism"):
        gaps = check_duality(f, b, impl=impl)
        assert gaps.max_gap <= 1e-6


def test_adjunction_small():
    rng = np.random.default_rng(43)
    b = StructuringFunction(np.array([[0, 0], [1, -1]]), np.array([64.0, -20.0]), "logarithmic")
    for _ in range(50):
        f = rng.uniform(-100.0, 255.0, size=(6, 6))
        g = rng.uniform(-100.0, 255.0, size=(6, 6))
        lhs = bool(np.all(log_dilation(f, b) <= g))
        rhs = bool(np.all(f <= log_erosion(g, b)))
        assert lhs == rhs


def test_opening_closing_laws():
    rng = np.random.default_rng(47)
    f = rng.uniform(0.0, 255.0, size=(12, 12))
    g = np.minimum(f + rng.uniform(0.0, 30.0, size=f.shape), 255.9)
    b = StructuringFunction(np.array([[0, 0], [1, 0], [0, -1]]), np.array([60.0, 128.0, -40.0]), "logarithmic")
    for impl in ("direct", "isomorphism"):
        for op, sign in ((log_opening, -1), (log_closing, +1)):
            pf = op(f, b, impl=impl)
            assert np.allclose(op(pf, b, impl=impl), pf, atol=1e-9)
            if sign < 0:
                assert np.all(pf <= f + 1e-12)
            else:
                assert np.all(pf >= f - 1e-12)
            assert np.all(pf <= op(g, b, impl=impl) + 1e-12)


def test_gradient_errors_and_edge_cases():
    b = StructuringFunction(np.array([[0, 0], [1, 0]]), np.array([0.0, 10.0]), "logarithmic")
    with pytest.raises(ValueError):
        log_gradient(np.array([-np.inf, 50.0]), b)     # erosion reaches -inf
    sym = flat_sf(1.0, kind="logarithmic")
    out = log_gradient(np.full((4, 4), M), sym)        # erosion == dilation == M
    assert np.array_equal(out, np.zeros((4, 4)))
    assert np.array_equal(log_gradient(np.full(6, 80.0), sym), np.zeros(6))


def test_gradient_empty_erosion_window_is_an_error():
    # single offset pointing right: at the last sample the erosion window
    # is empty (value M) while the dilation is finite
    b = StructuringFunction(np.array([[1, 0]]), np.array([0.0]), "logarithmic")
    with pytest.raises(ValueError):
        log_gradient(np.array([10.0, 20.0]), b)


def test_rejects_additive_sf_and_overrange_values():
    b_add = flat_sf(1.0, kind="additive")
    with pytest.raises(ValueError):
        log_dilation(np.zeros(4), b_add)
    b_big = StructuringFunction(np.array([[0, 0]]), np.array([256.0]), "logarithmic")
    with pytest.raises(ValueError):
        log_dilation(np.zeros(4), b_big)
    with pytest.raises(ValueError):
        log_erosion(np.zeros(4), flat_sf(1.0, kind="logarithmic"), impl="fast")
