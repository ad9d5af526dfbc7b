"""Scalar LIP (logarithmic image processing) arithmetic on the extended grey scale.

Grey values live in ``[-inf, m]`` where ``m`` is the grey-scale bound
(256.0 by default).  In this convention 0 is the white extremity (no
light-absorbing obstacle) and ``m`` is black (nothing transmitted).
Values in ``[0, m)`` are displayable grey levels; strictly negative
values act as light intensifiers; ``-inf`` and ``m`` are the least and
greatest elements of the lattice.

Every function here broadcasts over numpy arrays and plain scalars
alike and is pure, so concurrent use is safe.
"""

import numpy as np

DEFAULT_M = 256.0

__all__ = [
    "DEFAULT_M",
    "lip_add",
    "lip_negate",
    "lip_subtract",
    "lip_multiply",
    "transmittance",
    "to_absorbance",
    "from_absorbance",
]


def _check_scale(m):
    if not np.isfinite(m) or m <= 0:
        raise ValueError(f"grey scale m must be finite and positive, got {m}")


def _as_grey(x, m, name="grey value"):
    """Coerce to float64 and verify membership in [-inf, m]."""
    x = np.asarray(x, dtype=np.float64)
    if np.isnan(x).any():
        raise ValueError(f"{name} contains NaN")
    if np.any(x > m):
        raise ValueError(f"{name} exceeds the grey scale bound m={m}")
    return x


def _unwrap(out):
    return float(out) if np.ndim(out) == 0 else out


def lip_add(a, b, m=DEFAULT_M):
    """LIP sum ``a + b - a*b/m`` of two grey values.

    Models the superposition of two light-absorbing layers, whose
    transmittances multiply.  Evaluated in the factored form
    ``m - (m - a)*(m - b)/m`` so that the bound ``m`` is absorbing
    exactly (the result is ``m`` iff an operand is ``m``) and the sum
    with ``-inf`` is exactly ``-inf`` when the other operand is below
    ``m``.  The pairing of ``-inf`` with ``m`` is indeterminate and
    raises.
    """
    _check_scale(m)
    a = _as_grey(a, m)
    b = _as_grey(b, m)
    with np.errstate(invalid="ignore"):
        out = m - (m - a) * (m - b) / m
    if np.isnan(out).any():
        raise ValueError("undefined LIP sum at lattice extremes (-inf with m)")
    return _unwrap(out)


def lip_negate(a, m=DEFAULT_M):
    """LIP opposite ``(-a)/(1 - a/m)``, the additive inverse of `lip_add`.

    Order-reversing, with 0 as its only fixed point.  The black bound
    ``m`` has no opposite and raises.  ``-inf`` maps to ``m``, the
    continuous extension; note the reverse direction still raises, so
    the involution holds only below ``m``.
    """
    _check_scale(m)
    a = _as_grey(a, m)
    if np.any(a == m):
        raise ValueError("no LIP opposite for the black bound m")
    neg = np.isneginf(a)
    with np.errstate(invalid="ignore"):
        out = np.where(neg, m, (-a) * m / (m - a))
    return _unwrap(out)


def lip_subtract(a, b, m=DEFAULT_M):
    """LIP difference ``(a - b)/(1 - b/m)``, inverse of `lip_add` in b.

    Satisfies ``lip_add(lip_subtract(a, b), b) == a`` and is >= 0 iff
    ``a >= b``.  A superficially similar product form
    ``(a - b)*(1 - b/m)`` circulates in places; it is not the inverse
    of the LIP sum and is not used here.

    ``b`` must lie strictly inside ``(-inf, m)``: subtracting ``m`` is
    undefined, and subtracting ``-inf`` has no unique result because
    ``lip_add(., -inf)`` is constant.
    """
    _check_scale(m)
    a = _as_grey(a, m)
    b = _as_grey(b, m)
    if np.any(b == m):
        raise ValueError("LIP difference undefined: subtrahend at the black bound m")
    if np.isneginf(b).any():
        raise ValueError("LIP difference undefined: subtrahend -inf has no unique inverse")
    out = np.where(a == m, m, (a - b) * m / (m - b))
    return _unwrap(out)


def lip_multiply(lam, a, m=DEFAULT_M):
    """Scalar LIP product ``m - m*(1 - a/m)**lam``.

    Scales the thickness (opacity) of the absorbing layer by the real
    factor ``lam``: doubling equals ``lip_add(a, a)``, 1 is the
    identity, 0 yields the neutral element 0.  For ``a = -inf`` only
    positive factors are meaningful.
    """
    _check_scale(m)
    a = _as_grey(a, m)
    lam = np.asarray(lam, dtype=np.float64)
    if np.isnan(lam).any():
        raise ValueError("scale factor contains NaN")
    if np.isneginf(a).any() and np.any(lam <= 0):
        raise ValueError("LIP scaling of -inf requires a positive factor")
    with np.errstate(over="ignore"):
        out = m - m * ((m - a) / m) ** lam
    return _unwrap(out)


def transmittance(a, m=DEFAULT_M):
    """Fraction of light transmitted, ``1 - a/m``.

    Maps ``[0, m]`` onto ``[0, 1]`` (1 for no obstacle, 0 for opaque)
    and light intensifiers to values above 1.  Multiplicative under
    `lip_add`: ``T(lip_add(a, b)) == T(a)*T(b)``.
    """
    _check_scale(m)
    a = _as_grey(a, m)
    return _unwrap((m - a) / m)


def to_absorbance(v, m=DEFAULT_M):
    """Absorbance ``-ln(1 - v/m)`` of a grey value.

    The negative log of the transmittance.  Strictly increasing, it
    carries the grey scale ``[-inf, m]`` onto ``[-inf, +inf]`` with
    ``to_absorbance(0) == 0`` and ``to_absorbance(m) == +inf``, and it
    turns the LIP sum into ordinary addition.  This is the isomorphism
    behind the fast path of the logarithmic operators.
    """
    _check_scale(m)
    v = _as_grey(v, m)
    with np.errstate(divide="ignore"):
        out = -np.log((m - v) / m)
    return _unwrap(out)


def from_absorbance(t, m=DEFAULT_M):
    """Inverse of `to_absorbance`: ``m*(1 - exp(-t))``.

    Accepts any extended real; ``+inf`` maps back to exactly ``m`` and
    ``-inf`` to ``-inf``.
    """
    _check_scale(m)
    t = np.asarray(t, dtype=np.float64)
    if np.isnan(t).any():
        raise ValueError("absorbance contains NaN")
    with np.errstate(over="ignore"):
        out = m - m * np.exp(-t)
    return _unwrap(out)
