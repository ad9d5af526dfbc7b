"""
The logarithmic grey-level algebra
==================================

Grey levels in this library live on ``[-inf, 256)`` plus the absorbing
bound ``M = 256``, and add like light-absorbing filters stacked in
front of one lamp: each level is really a transmittance
``T(a) = 1 - a/M``, and stacking multiplies transmittances.  This demo
walks the scalar operations and the absorbance change of variables that
turns the whole algebra into ordinary addition.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from logmorph import (
    from_absorbance,
    lip_add,
    lip_multiply,
    lip_negate,
    to_absorbance,
    transmittance,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

# ----------------------------------------------------------------------
# Adding a constant: never crosses M
#
# Ordinary addition pushes bright pixels over the top of the scale;
# logarithmic addition saturates smoothly because the product of two
# transmittances below 1 stays below 1.

a = np.linspace(0.0, 255.0, 512)
fig, axes = plt.subplots(1, 3, figsize=(13, 4))

for c in (32.0, 96.0, 192.0):
    axes[0].plot(a, lip_add(a, c), label=f"a (+) {c:g}")
axes[0].plot(a, a, "k:", label="identity")
axes[0].axhline(256, color="red", lw=0.8)
axes[0].set(title="logarithmic addition saturates at M", xlabel="a", ylabel="a (+) c")
axes[0].legend()

# ----------------------------------------------------------------------
# The opposite: negative levels act as light intensifiers
#
# Every level below M has an opposite; the opposite of a dark level is
# a very negative number whose transmittance exceeds 1.

axes[1].plot(a[:-1], [lip_negate(v) for v in a[:-1]])
axes[1].set(title="LIP opposite (diverges at M)", xlabel="a", ylabel="(-) a")

check = lip_add(200.0, lip_negate(200.0))
print(f"200 (+) opposite(200) = {check:.3g}  (neutral element)")
print(f"transmittance of opposite(200): {transmittance(lip_negate(200.0)):.4f}  (> 1, intensifier)")

# ----------------------------------------------------------------------
# The absorbance isomorphism
#
# Absorbance -ln(1 - a/M) maps the grey scale to the ordinary real
# line: logarithmic addition becomes +, scalar multiplication becomes
# scaling.  The library's fast operator path works in this domain.

axes[2].plot(a, to_absorbance(a))
axes[2].set(title="absorbance  -ln(1 - a/M)", xlabel="a", ylabel="absorbance")

fig.tight_layout()
fig.savefig(out_dir / "lip_arithmetic.png", dpi=120)
print(f"wrote {out_dir / 'lip_arithmetic.png'}")

x, y = 80.0, 150.0
lhs = to_absorbance(lip_add(x, y))
rhs = to_absorbance(x) + to_absorbance(y)
print(f"absorbance(80 (+) 150) = {lhs:.12f}")
print(f"absorbance(80) + absorbance(150) = {rhs:.12f}")
print(f"round trip from_absorbance(to_absorbance(137.5)) = {from_absorbance(to_absorbance(137.5))}")

# Doubling a level equals adding it to itself -- the vector-space law.
print(f"2 (x) 100 = {lip_multiply(2.0, 100.0)}  vs  100 (+) 100 = {lip_add(100.0, 100.0)}")
