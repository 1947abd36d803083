"""An atlas of the SO(2,1) unitary representations in the (j, m) plane.

Positivity of both ladder-operator products carves the plane into two
triangles (one-sided multiplets) and a central diamond (two-sided ones);
nothing else is admissible. The same ladder coefficients connect the sector
energies back to the scarf spectrum.
"""

import numpy as np

from sips import (
    RepLabel,
    classify,
    energy_from_algebra,
    enumerate_multiplet,
    ladder_coefficient,
    positivity_check,
    region_of,
)

print("== classifying labels ==")
for j, m0 in [(-1.5, 1.5), (-1.5, -1.5), (-0.5, 0.0), (-1.5, 0.0)]:
    label = classify(j, m0)
    print(f"  (j={j:+.2f}, m0={m0:+.2f}) -> {label.rep_class.value}")

print("\n== a bounded-below multiplet and its ladder ==")
rep = RepLabel.bounded_below(-1.5)
multiplet = enumerate_multiplet(rep, 5)
print(f"  j={rep.j:g}, Casimir={multiplet.casimir:g}, m-values={multiplet.m_values}")
for m in multiplet.m_values[:3]:
    up = ladder_coefficient(rep.j, m, "raise")
    down = ladder_coefficient(rep.j, m, "lower")
    print(f"  m={m:4.1f}: raise coeff {up:.4f}  lower coeff {down:.4f}")

print("\n== mirror labels describe the same representation ==")
for j in (-2.5, -0.3):
    a = enumerate_multiplet(RepLabel.bounded_below(j), 4)
    b = enumerate_multiplet(RepLabel.bounded_below(-1.0 - j), 4)
    print(f"  j={j:+.2f} vs {-1.0 - j:+.2f}: same multiplet? {a.m_values == b.m_values}")

print("\n== scarf levels as representation data ==")
m_sector = 3.5  # the a0 = 3 member
for n in range(3):
    j = n - m_sector
    lower, upper = positivity_check(j, m_sector)
    print(f"  n={n}: j={j:+.1f}  E={energy_from_algebra(m_sector, j):g}  "
          f"positivity=({lower:g}, {upper:g})")

print("\n== a coarse text raster of the allowed regions ==")
symbols = {
    "bounded_below_region": "^",
    "bounded_above_region": "v",
    "square_region": "#",
    "forbidden": ".",
}
m_axis = np.arange(-4.0, 4.01, 0.5)
for j in np.arange(-4.0, 1.01, 0.5):
    row = "".join(symbols[region_of(float(j), float(m)).value] for m in m_axis)
    print(f"  j={j:+5.2f}  {row}")
print(f"  (columns: m from {m_axis[0]:g} to {m_axis[-1]:g}; "
      "^ bounded below, v bounded above, # two-sided band, . forbidden)")
