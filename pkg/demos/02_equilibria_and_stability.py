"""Rest points, their eigenvalues, and the two structural identities.

Setting the modified quadratic Lorenz field to zero gives a whole line of
rest points {(0, y, 0)} plus a symmetric pair

    E+/- = (+/- (beta rho^3)^(1/4), +/- (beta / rho)^(1/4), rho)

This script prints each representative rest point with its Jacobian
eigenvalues and classification, then checks the two exact identities the
field carries: the reflection symmetry S(x, y, z) = (-x, -y, z) maps the
flow to itself (so E- is exactly the mirror of E+), and the divergence is
the constant -(sigma + beta), so every phase volume contracts at one fixed
exponential rate no matter where it sits.

Run:  python3 demos/02_equilibria_and_stability.py
"""

import textwrap

import numpy as np

from mqlorenz import (
    SystemParams,
    apply_symmetry,
    classify_stability,
    divergence,
    find_equilibria,
    jacobian,
    vector_field,
    volume_contraction_check,
)

params = SystemParams(sigma=12.0, rho=8.0, beta=4.0)


def fmt_ev(ev):
    if ev.imag == 0.0:
        return f"{ev.real:.6f}"
    sign = "+" if ev.imag >= 0 else "-"
    return f"{ev.real:.6f} {sign} {abs(ev.imag):.6f}i"


print(f"rest points at (sigma, rho, beta) = "
      f"({params.sigma:g}, {params.rho:g}, {params.beta:g}):")
print()
for eq in find_equilibria(params):
    residual = float(np.max(np.abs(vector_field(eq.location, params))))
    rep = classify_stability(eq, params)
    loc = ", ".join(f"{c:.9g}" for c in eq.location)
    print(f"{eq.label.value:>3}  at ({loc})")
    print(f"     field residual {residual:.2e}")
    print(f"     eigenvalues: {', '.join(fmt_ev(ev) for ev in rep.eigenvalues)}")
    print(f"     classification: {rep.classification.value}")
    if rep.annotation:
        first, *rest = textwrap.fill(rep.annotation, 66).splitlines()
        print(f"     note: {first}")
        for line in rest:
            print(f"           {line}")
    print()

print("E+ has an expanding complex pair and one contracting real direction:")
print("nearby orbits spiral away inside a plane while being pulled in along")
print("the third axis, the classic saddle-focus picture. O sits on the line")
print("of rest points, so one eigenvalue is exactly zero there.")
print()

# identity 1: the reflection maps the flow field onto itself, bit for bit
rng = np.random.default_rng(7)
states = rng.uniform(-5.0, 5.0, size=(100, 3))
exact = all(
    np.array_equal(
        apply_symmetry(vector_field(s, params)),
        vector_field(apply_symmetry(s), params),
    )
    for s in states
)
eqs = find_equilibria(params)
mirror = np.array_equal(apply_symmetry(eqs[1].location), eqs[2].location)
print(f"symmetry: S(f(s)) == f(S(s)) at 100 random states, bitwise: {exact}")
print(f"symmetry: S(E+) == E-, bitwise: {mirror}")
print()

# identity 2: constant divergence, measured along an actual trajectory
div = divergence(params)
traces = {float(np.trace(jacobian(s, params))) for s in states}
measured, theoretical = volume_contraction_check(params, (1.0, 1.0, 1.0), 20.0, 1e-3)
print(f"Jacobian trace at all 100 states is exactly {div:g}: {traces == {div}}")
print(f"  value: -(sigma + beta)")
print(f"measured volume log-rate over t in [0, 20]: {measured:.6f}")
print(f"  relative error vs {theoretical:g}: {abs(measured - theoretical) / abs(theoretical):.2e}")
print()
print(f"every volume shrinks like exp({div:g} t): after one time unit only "
      f"{np.exp(div):.2e} of it is left, so the long-run motion must live on "
      f"a set with zero volume")
