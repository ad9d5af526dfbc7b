"""Structuring functions: finite sets of pixel offsets with grey-value weights."""

from dataclasses import dataclass, field

import numpy as np

from .lip import DEFAULT_M

KINDS = ("additive", "logarithmic")

__all__ = ["StructuringFunction", "hemisphere_sf", "flat_sf", "KINDS"]


@dataclass(frozen=True)
class StructuringFunction:
    """Weighted neighbourhood ``{(dx, dy) -> value}`` for morphological operators.

    ``kind`` states which arithmetic the weights are meant for:
    "additive" weights (classical operators) must be non-negative and
    finite, "logarithmic" weights (LIP operators) must be finite and
    are checked against the grey-scale bound where it is known, i.e.
    at operator call time.
    """

    offsets: np.ndarray = field()   # (n, 2) ints, columns (dx, dy)
    values: np.ndarray = field()    # (n,) float64
    kind: str = "additive"

    def __post_init__(self):
        offsets = np.atleast_2d(np.asarray(self.offsets, dtype=np.int64))
        values = np.atleast_1d(np.asarray(self.values, dtype=np.float64))
        if offsets.ndim != 2 or offsets.shape[1] != 2:
            raise ValueError("offsets must be an (n, 2) array of (dx, dy) pairs")
        if offsets.shape[0] == 0:
            raise ValueError("empty structuring function")
        if values.shape != (offsets.shape[0],):
            raise ValueError("values must align one-to-one with offsets")
        if len({(int(dx), int(dy)) for dx, dy in offsets}) != len(offsets):
            raise ValueError("offsets must be distinct")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not np.isfinite(values).all():
            raise ValueError("structuring values must be finite")
        if self.kind == "additive" and np.any(values < 0):
            raise ValueError("additive structuring values must be non-negative")
        offsets.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.offsets.shape[0]

    def reflected(self):
        """Central reflection: offsets negated, values kept.  Involutive."""
        return StructuringFunction(-self.offsets, self.values, self.kind)


def _disc_offsets(radius):
    r = int(np.floor(radius))
    pts = [
        (dx, dy)
        for dy in range(-r, r + 1)
        for dx in range(-r, r + 1)
        if dx * dx + dy * dy <= radius * radius
    ]
    return np.array(pts, dtype=np.int64).reshape(-1, 2)


def hemisphere_sf(radius, amplitude=None, kind="logarithmic", m=DEFAULT_M):
    """Hemispherical structuring function on the integer disc of ``radius``.

    The weight at offset (dx, dy) is
    ``amplitude * sqrt(1 - (dx^2 + dy^2)/radius^2)``, so the profile
    peaks at the origin with value ``amplitude`` and falls radially to
    zero at the rim.  ``amplitude`` defaults to ``radius`` (a true
    hemisphere in pixel/grey units) but is independent, since useful
    grey amplitudes are often much larger than the spatial radius.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    amplitude = float(radius) if amplitude is None else float(amplitude)
    if amplitude <= 0:
        raise ValueError("amplitude must be positive")
    if kind == "logarithmic" and amplitude >= m:
        raise ValueError(f"logarithmic structuring values must stay below m={m}")
    offsets = _disc_offsets(radius)
    rho2 = (offsets[:, 0] ** 2 + offsets[:, 1] ** 2).astype(np.float64)
    values = amplitude * np.sqrt(np.maximum(0.0, 1.0 - rho2 / (radius * radius)))
    return StructuringFunction(offsets, values, kind)


def flat_sf(radius, kind="additive"):
    """Flat (all-zero) structuring function on the integer disc of ``radius``.

    With zero weights both arithmetics degenerate to plain sup/inf
    filters, which is what makes this the bridge case where the
    logarithmic operators coincide with the classical ones.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    offsets = _disc_offsets(radius)
    return StructuringFunction(offsets, np.zeros(len(offsets)), kind)
