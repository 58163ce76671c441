# # Sampling W-random tournaments
#
# Each vertex gets a uniform position in [0,1]; vertex i beats vertex j with
# probability W(x_i, x_j). Random numbers come from a counter-based
# generator, so the first n vertices of a larger sample are exactly the
# sample of size n with the same seed.

from fractions import Fraction

from tournament_limits import (
    Atom,
    SampleConfig,
    adjacency_kernel,
    cyclic,
    decompose,
    induced,
    kernel_direct_sum,
    quasi_random,
    reducibility_rate,
    sample_tournament,
    sample_tournaments,
    strong_components,
    transitive_kernel,
    transitivity_report,
)

U = quasi_random()

# ## Samples from the transitive kernel are transitive

samples = sample_tournaments(transitive_kernel(), SampleConfig(20, seed=3, reps=200))
print("transitive samples:", sum(transitivity_report(G).verdict for G in samples), "of", len(samples))

# ## The prefix property

big = sample_tournament(U, SampleConfig(12, seed=99))
small = sample_tournament(U, SampleConfig(6, seed=99))
print("first 6 vertices agree:", induced(big, range(6)) == small)

# ## How often is a sample reducible?
#
# Two quasi-random halves where the first beats the second: almost every
# sample splits along the halves. The quasi-random kernel itself rarely
# produces a reducible tournament once n is moderate.

two = kernel_direct_sum([Atom(Fraction(1, 2), U), Atom(Fraction(1, 2), U)])
for n in (4, 6, 10):
    print(f"  n={n:2}: two halves {reducibility_rate(two, n, 2000, seed=5):.3f}"
          f"   quasi-random {reducibility_rate(U, n, 2000, seed=5):.3f}")

# The kernel of the cyclic triangle is irreducible, yet a sample of three
# vertices is cyclic only when they land in three different thirds
# (probability 2/9) or all in one third and happen to form a cycle
# (probability 1/9 * 1/4). Everything else is reducible.

print("C3 kernel, n=3:", reducibility_rate(adjacency_kernel(cyclic(3)), 3, 4000, seed=5), "(exact 3/4)")

# ## Looking at one sample

G = sample_tournament(two, SampleConfig(10, seed=7))
print(G)
print("strong components:", strong_components(G))
print("coarse decomposition:", [(c.kind.value, c.vertices) for c in decompose(G).coarse])
