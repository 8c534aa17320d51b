"""Burgers vector of a screw core measured on homotopic and non-enclosing loops.

Prints the circuit integral of each loop and the flux of rot T^ through a
disk, then the non-enclosing residual under grid refinement.
"""
import numpy as np

from dislokin import Chart, Contour, GridSpec, SurfacePatch, circuit_integral, rot_distortion, surface_flux
from dislokin.fixtures import CoreSpec, screw_distortion

core = CoreSpec((0.0, 0.0, 0.0), (0.0, 0.0, 1.0), (0.0, 0.0, 1.0), core_radius=0.15)
chart = Chart.cartesian(GridSpec.box((-2, -2, -1), (2, 2, 1), 64))
that = screw_distortion(core, chart)

loops = {
    "circle r=0.6": Contour.circle((0, 0, 0), 0.6),
    "circle r=1.5, shifted": Contour.circle((0.0, 0.2, -0.4), 1.5),
    "square": Contour.rectangle((0, 0, 0.2), (1.0, 1.0), points_per_side=16),
    "ellipse": Contour.ellipse((0, 0, -0.2), (1.2, 0.6)),
    "away from core": Contour.circle((1.2, 1.2, 0), 0.3),
}
for name, loop in loops.items():
    b = np.asarray(circuit_integral(that, loop))
    print(f"{name:<24s} b = ({b[0]: .2e}, {b[1]: .2e}, {b[2]: .6f})")

flux = np.asarray(surface_flux(rot_distortion(that), SurfacePatch.disk((0, 0, 0), 1.0)))
print(f"{'flux of rot T^, r=1':<24s} b = ({flux[0]: .2e}, {flux[1]: .2e}, {flux[2]: .6f})")

print("\nnon-enclosing residual (trilinear sampling error):")
prev = None
for n in (16, 32, 64):
    box = Chart.cartesian(GridSpec.box((-2, -2, -1), (2, 2, 1), n))
    r = np.linalg.norm(np.asarray(circuit_integral(screw_distortion(core, box), loops["away from core"])))
    order = "" if prev is None else f"  order {np.log2(prev / r):.2f}"
    print(f"  {n:3d} cells  |b| = {r:.3e}{order}")
    prev = r
