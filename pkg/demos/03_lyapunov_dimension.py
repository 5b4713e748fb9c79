"""Lyapunov spectrum, the divergence identity, and the Kaplan-Yorke verdict.

Three Lyapunov exponents say how an infinitesimal ball deforms along the
flow: each positive exponent is a direction of exponential stretching, each
negative one a direction of squeezing. Benettin's method integrates a full
tangent frame alongside the orbit, re-orthonormalizing every half time unit
and averaging the log growth of the frame legs.

Two numbers grade the result. The exponent sum must equal the divergence
-(sigma + beta) = -16 exactly (a built-in consistency check: the sum of all
stretching rates IS the volume rate). And the Kaplan-Yorke dimension
interpolates how many directions the long-run motion actually fills.

Run:  python3 demos/03_lyapunov_dimension.py   (about half a minute)
"""

import time

from mqlorenz import BenettinSettings, SystemParams, kaplan_yorke, lyapunov_spectrum

params = SystemParams(sigma=12.0, rho=8.0, beta=4.0)
cfg = BenettinSettings()
print(f"Benettin run: h = {cfg.h:g}, transient {cfg.transient:g}, "
      f"averaging over {cfg.total_time:g} time units, "
      f"renormalizing every {cfg.renorm_interval:g}")

start = time.perf_counter()
spec = lyapunov_spectrum(params, (1.0, 1.0, 1.0), cfg)
wall = time.perf_counter() - start
l1, l2, l3 = spec.exponents

print(f"done in {wall:.1f} s")
print()
print(f"lambda_1 = {l1:+.6f}")
print(f"lambda_2 = {l2:+.6f}")
print(f"lambda_3 = {l3:+.6f}")
print()
total = l1 + l2 + l3
print(f"sum = {total:.9f} vs divergence -(sigma + beta) = -16")
print(f"  identity error: {abs(total + 16.0):.2e} (pure integration noise)")
print()
print(f"Kaplan-Yorke dimension: {spec.dimension:.6f}")
print()
print("reading the verdict: lambda_1 sits barely above zero and the")
print("dimension barely above one. That is not a strange attractor, it is")
print("the signature of the invariant line of rest points {(0, y, 0)}: the")
print("orbit from (1, 1, 1) rings chaotically for a long transient, then")
print("collapses onto the line (see demos/01_attractor_tour.py). The near-")
print("zero exponent is the neutral direction along the line, inflated a")
print("touch by the averaging window straddling the transient.")
print()

# the dimension formula itself, on a hand-made spectrum with one expanding
# direction: largest k with partial sum >= 0, plus the interpolated fraction
demo_exponents = (0.9, 0.0, -12.0)
d = kaplan_yorke(demo_exponents)
print(f"for contrast, a genuinely chaotic spectrum {demo_exponents} gives")
print(f"Kaplan-Yorke dimension {d:.4f}: two whole directions plus a")
print(f"{d - 2.0:.4f} sliver of the contracting third")
