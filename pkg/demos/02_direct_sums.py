# # Direct sums and their decomposition
#
# Placing tournaments side by side, with every vertex of an earlier part
# beating every vertex of a later part, gives their direct sum. Every
# tournament splits uniquely into irreducible pieces this way, and induced
# densities in a direct sum can be computed from the parts alone.

from fractions import Fraction

from tournament_limits import cyclic, decompose, direct_sum, induced, t_ind_direct_sum, transitive
from tournament_limits.tournament import singleton

# ## Building a direct sum

parts = [cyclic(3), transitive(2), cyclic(3)]
G = direct_sum(parts)
print(G)

# ## Decomposing it again
#
# The strong components come out in order. Runs of singletons are grouped
# into transitive pieces in the coarse view.

d = decompose(G)
for c in d.coarse:
    print(f"  {c.kind.value:12} {c.vertices}")

# Relabelling the vertices does not change the decomposition up to isomorphism.

H = G.relabel([5, 2, 7, 0, 3, 6, 1, 4])
print("component sizes after relabelling:", [len(c) for c in decompose(H).components])
print("round trip:", d.reassemble(G) == induced(G, d.order))

# ## Induced densities from the parts
#
# The probability that three random vertices of C3 + C3 span a cyclic
# triangle, computed from the parts:

print("t_ind(C3, C3 + C3) =", t_ind_direct_sum(cyclic(3), [cyclic(3), cyclic(3)]))

# Adding singletons dilutes the cyclic triangles. The pattern is labelled, so
# the single cyclic triple of C3 + k singletons contributes 3 of the
# (3 + k)(2 + k)(1 + k) ordered triples.

for k in range(0, 5):
    ps = [cyclic(3)] + [singleton()] * k
    print(f"  C3 + {k} singletons: t_ind(C3) = {t_ind_direct_sum(cyclic(3), ps)}"
          f" (expected {Fraction(3, (3 + k) * (2 + k) * (1 + k))})")
