"""
Lattice structure of the logarithmic operators
==============================================

Three structural facts make logarithmic erosion and dilation a genuine
morphology rather than an ad-hoc filter pair:

1. *Adjunction* — dilation-below iff erosion-above, which is the
   defining Galois connection of a morphology;
2. *Duality* — erosion is the negative of the dilation of the negative,
   with the structuring function reflected;
3. *Equivalence* — the direct definition and the absorbance-domain fast
   path compute the same operator.

This demo checks each one numerically on small random images and plots
the resulting order sandwich on a 1-D signal.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from logmorph import (
    check_duality,
    hemisphere_sf,
    log_dilation,
    log_erosion,
    log_opening,
    negative_image,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

rng = np.random.default_rng(7)
b = hemisphere_sf(2.0, amplitude=32.0, kind="logarithmic")

# ----------------------------------------------------------------------
# Adjunction: dilation(f) <= g everywhere exactly when f <= erosion(g)
# everywhere.  The two booleans must agree for every pair (f, g).

agree = 0
trials = 200
for _ in range(trials):
    f = rng.uniform(0.0, 255.0, size=(16, 16))
    g = rng.uniform(0.0, 255.0, size=(16, 16))
    below = bool(np.all(log_dilation(f, b) <= g))
    above = bool(np.all(f <= log_erosion(g, b)))
    agree += below == above
print(f"adjunction agreement: {agree}/{trials} random pairs")

# ----------------------------------------------------------------------
# Duality: erosion of f equals the negative of the dilation of the
# negative of f, with the reflected structuring function — and vice
# versa.  check_duality reports the worst gap of each direction.

worst = 0.0
for _ in range(50):
    f = rng.uniform(0.0, 255.0, size=(16, 16))
    gaps = check_duality(f, b)
    worst = max(worst, gaps.erosion_side, gaps.dilation_side)
print(f"duality gap over 50 images:   {worst:.3e}")

lhs = log_erosion(f, b)
rhs = negative_image(log_dilation(negative_image(f), b.reflected()))
print(f"one spelled-out instance:     {float(np.max(np.abs(lhs - rhs))):.3e}")

# ----------------------------------------------------------------------
# Equivalence: the direct definition and the absorbance isomorphism
# fast path are the same operator up to floating point.

worst = 0.0
for _ in range(50):
    f = rng.uniform(0.0, 255.0, size=(16, 16))
    d_direct = log_dilation(f, b, impl="direct")
    d_iso = log_dilation(f, b, impl="isomorphism")
    worst = max(worst, float(np.max(np.abs(d_direct - d_iso))))
print(f"direct vs isomorphism gap:    {worst:.3e}")

# ----------------------------------------------------------------------
# Picture: the sandwich erosion <= opening <= f <= dilation on a 1-D
# profile.  The opening (erosion followed by the adjoint dilation) slides
# back up under the signal but can never overshoot it.

x = np.arange(256, dtype=float)
f = 90.0 + 70.0 * np.exp(-((x - 96.0) ** 2) / 200.0) + 50.0 * np.exp(
    -((x - 180.0) ** 2) / 18.0
)
b1 = hemisphere_sf(12.0, amplitude=40.0, kind="logarithmic")

ero = log_erosion(f, b1)
dil = log_dilation(f, b1)
opened = log_opening(f, b1)

fig, ax = plt.subplots(figsize=(8, 4.5))
ax.plot(x, f, "k", lw=1.5, label="signal f")
ax.plot(x, dil, "C3", lw=1.0, label="logarithmic dilation")
ax.plot(x, ero, "C0", lw=1.0, label="logarithmic erosion")
ax.plot(x, opened, "C2--", lw=1.0, label="opening (erosion then dilation)")
ax.set_xlabel("position")
ax.set_ylabel("grey value")
ax.set_title("erosion ≤ opening ≤ signal ≤ dilation")
ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig(out_dir / "lattice_properties.png", dpi=120)
print(f"wrote {out_dir / 'lattice_properties.png'}")

sandwich_ok = bool(
    np.all(ero <= opened + 1e-9)
    and np.all(opened <= f + 1e-9)
    and np.all(f <= dil + 1e-9)
)
print(f"erosion <= opening <= f <= dilation everywhere: {sandwich_ok}")
