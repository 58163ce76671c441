# # Densities in a kernel with a transitive segment
#
# Take the kernel whose first half is quasi-random and whose second half is
# transitive, with the first half beating the second. Its induced densities
# can be computed exactly, and approximated in two independent ways: by
# discretising the transitive half into finer and finer staircases, and by
# sampling.

from fractions import Fraction

from tournament_limits import (
    Atom,
    SampleConfig,
    TransitiveSeg,
    cyclic,
    discretize,
    kernel_direct_sum,
    mc_density,
    quasi_random,
    t_ind_segment,
    t_step,
    transitive,
)

W = kernel_direct_sum([Atom(Fraction(1, 2), quasi_random()), TransitiveSeg(Fraction(1, 2))])

# ## Exact values

exact = {"T3": t_ind_segment(transitive(3), W), "C3": t_ind_segment(cyclic(3), W)}
print({name: str(v) for name, v in exact.items()})

# ## Discretisation
#
# Replacing the transitive half with n equal blocks gives a step kernel.
# The error shrinks by a factor of about four each time n doubles.

for name, F in (("T3", transitive(3)), ("C3", cyclic(3))):
    for n in (8, 16, 32, 64):
        approx = t_step(F, discretize(W, n))
        print(f"  {name} n={n:3}: {float(approx):.6f}  error {float(approx - exact[name]):+.2e}")

# ## Exact limit from four discretisations
#
# The discretised density is a polynomial of degree at most 3 in h = 1/n,
# so Lagrange interpolation through n = 1..4 evaluated at h = 0 recovers the
# exact value.


def value_at_zero(points):
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = yi
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= -xj / (xi - xj)
        total += term
    return total


for name, F in (("T3", transitive(3)), ("C3", cyclic(3))):
    pts = [(Fraction(1, n), t_step(F, discretize(W, n))) for n in range(1, 5)]
    print(f"  {name}: extrapolated {value_at_zero(pts)}")

# ## Sampling

for name, F in (("T3", transitive(3)), ("C3", cyclic(3))):
    rep = mc_density(F, W, SampleConfig(3, seed=11, reps=100_000), exact[name])
    print(f"  {name}: estimate {rep.estimate:.5f} +/- {rep.std_error:.5f}, z = {rep.z:+.2f}")
