"""Images as float arrays, display helpers, and synthetic test signals.

An image is a 1-D or 2-D float64 numpy array of grey values over its
index domain, paired with a grey-scale bound ``m`` passed to whichever
operation needs it.  Arrays may hold values outside the displayable
range ``[0, m)``: morphological outputs legitimately go negative (light
intensifiers) or reach ``m`` and ``-inf`` at lattice extremes, and the
representation keeps them losslessly.
"""

import numpy as np

from .lip import DEFAULT_M, lip_add

__all__ = [
    "as_grey_image",
    "is_displayable",
    "complement",
    "rescale_for_display",
    "exposure_change",
    "two_peak_signal",
]


def as_grey_image(f, m=None):
    """Coerce to a float64 signal or image array, optionally bounded by ``m``."""
    arr = np.asarray(f, dtype=np.float64)
    if arr.ndim not in (1, 2):
        raise ValueError(f"expected a 1-D signal or 2-D image, got ndim={arr.ndim}")
    if arr.size == 0:
        raise ValueError("empty image")
    if np.isnan(arr).any():
        raise ValueError("image contains NaN")
    if m is not None and np.any(arr > m):
        raise ValueError(f"image has grey values above the scale bound m={m}")
    return arr


def is_displayable(f, m=DEFAULT_M):
    """True when every pixel lies in the display range ``[0, m)``."""
    arr = as_grey_image(f)
    return bool(np.all((arr >= 0) & (arr < m)))


def complement(f, m=DEFAULT_M):
    """Pixel-wise complement ``m - 1 - f``, an involution on ``[0, m-1]``.

    Used to swap bright and dark structures so operators tuned for the
    dark (high-value) end act on what the eye sees as bright content.
    Only defined on the display range; anything outside raises.
    """
    arr = as_grey_image(f)
    if np.any(arr < 0) or np.any(arr > m - 1):
        raise ValueError("complement undefined outside the display range [0, m-1]")
    return m - 1 - arr


def rescale_for_display(f):
    """Affine min-max rescale onto integer grey levels 0..255.

    Maps ``[min(f), max(f)]`` onto ``[0, 255]`` and rounds half up, so
    any non-constant image attains both 0 and 255.  Constant images
    carry no contrast and map to 0.  Unbounded pixels cannot be
    rescaled and raise.
    """
    arr = as_grey_image(f)
    if not np.isfinite(arr).all():
        raise ValueError("cannot rescale unbounded image (infinite pixels present)")
    lo = arr.min()
    hi = arr.max()
    if hi == lo:
        return np.zeros_like(arr)
    scaled = (arr - lo) * (255.0 / (hi - lo))
    return np.floor(scaled + 0.5)


def exposure_change(f, c, m=DEFAULT_M):
    """Simulated exposure shift: pixel-wise LIP sum with the constant ``c``.

    Positive ``c`` darkens (transmittance is multiplied by ``1 - c/m``
    everywhere), and the LIP opposite of ``c`` undoes it exactly, which
    is what makes this a faithful stand-in for changing exposure time.
    """
    arr = as_grey_image(f, m)
    c = float(c)
    if not np.isfinite(c) or c >= m:
        raise ValueError("exposure constant must be finite and below m")
    return lip_add(arr, c, m)


def _raised_cosine(x, center, half_width):
    u = np.abs(x - center) / half_width
    return np.where(u <= 1.0, 0.5 * (1.0 + np.cos(np.pi * u)), 0.0)


def two_peak_signal(length=512, baseline=10.0, low_peak=120.0, high_peak=230.0):
    """Deterministic 1-D test signal with one low and one high bump.

    Two non-overlapping raised-cosine bumps over a flat baseline.  The
    defaults top out at 230, close enough to a 256 grey scale that a
    classical dilation by a moderate structuring function overshoots
    the scale while the logarithmic one cannot, and erosions of the
    baseline go negative.  That makes this the standard fixture for
    contrasting the two operator families.
    """
    if length < 16:
        raise ValueError("length must be at least 16")
    x = np.arange(length, dtype=np.float64)
    c1 = round(0.27 * (length - 1))
    c2 = round(0.68 * (length - 1))
    w1 = max(2, round(0.12 * length))
    w2 = max(2, round(0.14 * length))
    signal = (
        baseline
        + (low_peak - baseline) * _raised_cosine(x, c1, w1)
        + (high_peak - baseline) * _raised_cosine(x, c2, w2)
    )
    return signal
