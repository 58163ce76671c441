# # Step kernels, irreducibility and the Cantor-like family
#
# A tournament limit can be represented by a kernel W on [0,1]^2 with
# W(x,y) + W(y,x) = 1. Step kernels are constant on blocks. A kernel is
# reducible when some set of blocks beats everything outside it outright.

import json
from fractions import Fraction

from tournament_limits import (
    Atom,
    cantor_truncation,
    cyclic,
    decompose_kernel,
    decompose_segment_kernel,
    eta,
    is_irreducible_kernel,
    kernel_direct_sum,
    kernel_transitivity_report,
    quasi_random,
    reducibility_witness,
    staircase,
    step_kernel,
    tournament_blowup,
)
from tournament_limits.formats import kernel_to_obj

U = quasi_random()

# ## A reducible step kernel
#
# Two blocks of equal weight where the first beats the second outright.

W = staircase(2)
print("irreducible:", is_irreducible_kernel(W))
w = reducibility_witness(W)
print("witness blocks:", w.blocks, " mass:", w.mass, " integral:", w.integral, " holds:", w.holds)

# A blow-up of the cyclic triangle stays irreducible.

B = tournament_blowup(cyclic(3), [U, staircase(2), U])
print("blow-up of C3 irreducible:", is_irreducible_kernel(B))

# ## Decomposing a shuffled kernel
#
# Four blocks: a dominant one, an irreducible pair, and a dominated one.
# After shuffling, decomposition restores the order and groups the pair.

two = step_kernel([Fraction(1, 4)] * 4, [
    [Fraction(1, 2), 1, 1, 1],
    [0, Fraction(1, 2), Fraction(1, 3), 1],
    [0, Fraction(2, 3), Fraction(1, 2), 1],
    [0, 0, 0, Fraction(1, 2)],
]).permute([2, 0, 3, 1])
d = decompose_kernel(two)
print("block order:", d.block_order)
for seg in d.result.segments:
    print(f"  atom of weight {seg.weight} with {seg.inner.m} block(s)")

# ## The Cantor-like family
#
# Each level replaces the middle of every transitive segment by a scaled
# copy of an irreducible kernel. The transitive part keeps shrinking, and
# the induced density of cyclic triangles grows.

for depth in range(4):
    K = cantor_truncation(depth, U)
    r = kernel_transitivity_report(K, k_cap=3)
    print(f"depth {depth}: {len(K.segments):2} segments, atom mass {K.atom_mass}, t(C3) = {r.t_c3}")

print("eta for depth 1:", [(index, str(start), str(length)) for index, start, length in eta(cantor_truncation(1, U))])

# Decomposition leaves an already canonical segment kernel alone.

K = cantor_truncation(2, U)
print("idempotent:", decompose_segment_kernel(K) == K)

# Serialised form of a small kernel:

print(json.dumps(kernel_to_obj(kernel_direct_sum([Atom(Fraction(1, 2), U), Atom(Fraction(1, 2), U)]))))
