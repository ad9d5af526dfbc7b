"""Classical grey-level morphology with additive structuring functions.

Dilation takes the supremum of ``f(x - h) + b(h)`` over the structuring
support, erosion the infimum of ``f(x + h) - b(h)``; this exact pairing
of the two formulas (same ``b``, no reflection) is an adjunction, which
the test suite verifies rather than assumes.  Samples falling outside
the image domain are skipped, equivalent to padding with the neutral
elements -inf (dilation) and +inf (erosion) of sup and inf.

`dilation` and `erosion` are vectorised per structuring offset; the
``*_reference`` twins are deliberately naive per-pixel loops kept as
the oracle any optimised kernel must match bit for bit.
"""

import numpy as np

from .image import as_grey_image

__all__ = [
    "dilation",
    "erosion",
    "opening",
    "closing",
    "gradient",
    "dilation_reference",
    "erosion_reference",
]


def _check_additive(b):
    if b.kind != "additive":
        raise ValueError("classical operators take an additive structuring function")
    if len(b) == 0:
        raise ValueError("empty structuring function")


def _translate(arr, dy, dx, fill):
    """out[y, x] = arr[y - dy, x - dx], with ``fill`` outside the domain."""
    h, w = arr.shape
    out = np.full((h, w), fill)
    ys = slice(max(dy, 0), h + min(dy, 0))
    xs = slice(max(dx, 0), w + min(dx, 0))
    if ys.start < ys.stop and xs.start < xs.stop:
        out[ys, xs] = arr[slice(max(-dy, 0), h + min(-dy, 0)), slice(max(-dx, 0), w + min(-dx, 0))]
    return out


def _dilation_raw(arr, offsets, values):
    acc = np.full(arr.shape, -np.inf)
    for (dx, dy), v in zip(offsets, values):
        np.maximum(acc, _translate(arr, dy, dx, -np.inf) + v, out=acc)
    return acc


def _erosion_raw(arr, offsets, values):
    acc = np.full(arr.shape, np.inf)
    for (dx, dy), v in zip(offsets, values):
        np.minimum(acc, _translate(arr, -dy, -dx, np.inf) - v, out=acc)
    return acc


def _apply(f, b, raw):
    arr = as_grey_image(f)
    flat = arr.ndim == 1
    a2 = arr[np.newaxis, :] if flat else arr
    out = raw(a2, b.offsets, b.values)
    return out[0] if flat else out


def dilation(f, b):
    """Grey-level dilation: sup of ``f(x - h) + b(h)`` over the support of b."""
    _check_additive(b)
    return _apply(f, b, _dilation_raw)


def erosion(f, b):
    """Grey-level erosion: inf of ``f(x + h) - b(h)`` over the support of b."""
    _check_additive(b)
    return _apply(f, b, _erosion_raw)


def opening(f, b):
    """Erosion followed by dilation; increasing, anti-extensive, idempotent."""
    return dilation(erosion(f, b), b)


def closing(f, b):
    """Dilation followed by erosion; increasing, extensive, idempotent."""
    return erosion(dilation(f, b), b)


def gradient(f, b):
    """Dilation minus erosion; non-negative for structuring functions
    whose origin weight is present and non-negative (finite images)."""
    return dilation(f, b) - erosion(f, b)


def _reference(f, b, dilate):
    _check_additive(b)
    arr = as_grey_image(f)
    flat = arr.ndim == 1
    a2 = arr[np.newaxis, :] if flat else arr
    h, w = a2.shape
    out = np.empty((h, w))
    offsets = [(int(dx), int(dy)) for dx, dy in b.offsets]
    values = [float(v) for v in b.values]
    for y in range(h):
        for x in range(w):
            best = -np.inf if dilate else np.inf
            for (dx, dy), v in zip(offsets, values):
                sy = y - dy if dilate else y + dy
                sx = x - dx if dilate else x + dx
                if 0 <= sy < h and 0 <= sx < w:
                    c = a2[sy, sx] + v if dilate else a2[sy, sx] - v
                    if (c > best) if dilate else (c < best):
                        best = c
            out[y, x] = best
    return out[0] if flat else out


def dilation_reference(f, b):
    """Per-pixel double-loop dilation, the bit-exact oracle for `dilation`."""
    return _reference(f, b, dilate=True)


def erosion_reference(f, b):
    """Per-pixel double-loop erosion, the bit-exact oracle for `erosion`."""
    return _reference(f, b, dilate=False)
