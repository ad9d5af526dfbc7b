"""Image model: validation, complement, rescale, synthetic signal, exposure."""

import numpy as np
import pytest

from logmorph import (
    as_grey_image,
    complement,
    exposure_change,
    is_displayable,
    lip_add,
    rescale_for_display,
    transmittance,
    two_peak_signal,
)


def test_as_grey_image_accepts_1d_and_2d():
    assert as_grey_image([1.0, 2.0]).shape == (2,)
    assert as_grey_image([[1.0, 2.0], [3.0, 4.0]]).shape == (2, 2)
    out = as_grey_image(np.arange(4).reshape(2, 2))
    assert out.dtype == np.float64


def test_as_grey_image_rejects_bad_shapes_and_values():
    with pytest.raises(ValueError):
        as_grey_image(np.zeros((2, 2, 2)))
    with pytest.raises(ValueError):
        as_grey_image(np.array([]))
    with pytest.raises(ValueError):
        as_grey_image(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        as_grey_image(np.array([1.0, 300.0]), m=256.0)
    as_grey_image(np.array([1.0, 300.0]))  # no bound given, no bound enforced


def test_is_displayable():
    assert is_displayable(np.array([0.0, 255.0]))
    assert not is_displayable(np.array([-1.0, 10.0]))
    assert not is_displayable(np.array([10.0, 256.0]))
    assert not is_displayable(np.array([10.0, np.inf]))


def test_complement_involution():
    f = np.array([[0.0, 10.0], [200.0, 255.0]])
    c = complement(f)
    assert np.array_equal(c, np.array([[255.0, 245.0], [55.0, 0.0]]))
    assert np.array_equal(complement(c), f)


def test_complement_range_check():
    with pytest.raises(ValueError):
        complement(np.array([256.0]))       # m-1 is the top displayable level
    with pytest.raises(ValueError):
        complement(np.array([-0.5]))
    assert complement(np.array([50.0]), m=101.0) == pytest.approx([50.0])


def test_rescale_for_display():
    # [DERIVED] affine map x -> (x - lo) * 255/(hi - lo), rounded half-up
    f = np.array([-1.0, 0.0, 1.0])
    assert np.array_equal(rescale_for_display(f), np.array([0.0, 128.0, 255.0]))
    g = np.array([10.0, 10.0, 10.0])
    assert np.array_equal(rescale_for_display(g), np.zeros(3))
    h = np.array([0.0, 255.0])
    assert np.array_equal(rescale_for_display(h), h)
    with pytest.raises(ValueError):
        rescale_for_display(np.array([0.0, np.inf]))


def test_two_peak_signal_shape_and_levels():
    f = two_peak_signal()
    assert f.shape == (512,)
    assert f.min() == pytest.approx(10.0)          # baseline
    assert f.max() == pytest.approx(230.0)         # high peak
    c1, c2 = round(0.27 * 511), round(0.68 * 511)
    assert f[c1] == pytest.approx(120.0)           # low peak sits at its centre
    assert f[c2] == pytest.approx(230.0)
    assert f[0] == pytest.approx(10.0) and f[-1] == pytest.approx(10.0)
    # peaks are separated by a stretch of baseline
    mid = (c1 + c2) // 2
    assert f[mid] == pytest.approx(10.0)


def test_two_peak_signal_lengths():
    assert two_peak_signal(256).shape == (256,)
    assert two_peak_signal(256).max() == pytest.approx(230.0)
    with pytest.raises(ValueError):
        two_peak_signal(8)


def test_exposure_change_is_lip_shift():
    g = np.array([0.0, 50.0, 200.0])
    out = exposure_change(g, 192.0)
    assert np.array_equal(out, lip_add(g, 192.0))
    # transmittances scale by a constant factor: the exposure model
    ratio = transmittance(out) / transmittance(g)
    assert np.allclose(ratio, ratio[0], rtol=0, atol=1e-12)


def test_exposure_change_composes():
    g = np.array([0.0, 30.0, 128.0, 250.0])
    c, d = 100.0, 60.0
    two_steps = exposure_change(exposure_change(g, c), d)
    one_step = exposure_change(g, lip_add(c, d))
    assert np.allclose(two_steps, one_step, rtol=0, atol=1e-9)
    # undone by the LIP opposite of c
    from logmorph import lip_negate

    assert np.allclose(exposure_change(exposure_change(g, c), lip_negate(c)), g, atol=1e-9)


def test_rescale_attains_extremes():
    rng = np.random.default_rng(61)
    f = rng.uniform(-500.0, 200.0, size=(16, 16))
    out = rescale_for_display(f)
    assert out.min() == 0.0 and out.max() == 255.0
    assert np.all((out >= 0) & (out <= 255))
    assert np.array_equal(out, np.floor(out))     # integral levels


def test_exposure_change_validation():
    with pytest.raises(ValueError):
        exposure_change(np.array([10.0]), 256.0)
    with pytest.raises(ValueError):
        exposure_change(np.array([10.0]), np.inf)
    out = exposure_change(np.array([10.0]), -64.0)   # brightening is allowed
    assert out[0] < 10.0
