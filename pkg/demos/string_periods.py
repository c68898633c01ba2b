"""Periods of maps Delta^3 -> SU(2): quadrature convergence, winding, calibration."""
from linftykan.stringmod import (bundled_tetra_datum, calibrate, cartan_period, cocycle_check,
                                 concat_map, degree1, degree1_reversed, qexp)
import numpy as np

f = degree1()
print("order   period(degree1)   error")
for order in (4, 8, 12, 16, 24):
    p = cartan_period(f, order)
    print(f"{order:5d}   {p:.12f}   {abs(p - 1):.1e}")

print("\nreversed:", round(cartan_period(degree1_reversed()), 9))
for k in (1, 2, 3):
    print(f"concat-{k}:", round(cartan_period(concat_map(k), 16), 6))

g = qexp(np.array([0.4, -1.3, 0.2]))
print("left translation changes the period by", abs(cartan_period(f.left_translate(g)) - cartan_period(f)))

cal = calibrate()
print(f"\nraw integral over SU(2): {cal['raw_integral']:.9f} (4 pi^2 = {4 * np.pi ** 2:.9f})")
print(f"calibration constant:    {cal['constant']:.12f}")

faces, filling = bundled_tetra_datum((1.0, 0.0, 0.0, 0.0))
print("\ncocycle check, b = (1, 0, 0, 0):", cocycle_check(faces, filling))
