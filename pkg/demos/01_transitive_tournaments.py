# # When is a tournament transitive?
#
# A tournament is transitive when its "beats" relation is a linear order.
# There are many equivalent ways to say this: no directed 3-cycle, no cycle
# at all, the right score sequence, the right number of directed paths, and
# so on. `transitivity_report` evaluates all of them and records whether they
# agree.

import random

from tournament_limits import cyclic, direct_sum, scores, transitive, transitivity_report
from tournament_limits.tournament import all_tournaments, random_tournament, singleton

# ## A transitive tournament and a 3-cycle

for name, G in [("T4", transitive(4)), ("C3", cyclic(3)), ("C3 + K1", direct_sum([cyclic(3), singleton()]))]:
    r = transitivity_report(G)
    print(f"{name:8} transitive={r.verdict}  scores={scores(G)}  all criteria agree={r.all_agree}")

# ## The individual verdicts
#
# For a non-transitive tournament the report also carries a witness cycle and
# an intransitive triple.

r = transitivity_report(direct_sum([cyclic(3), singleton()]))
for key, value in r.verdicts.items():
    print(f"  {key:28} {value}")
print("  cycle:", r.cycle, " triple:", r.intransitive_triple)

# ## Exhaustive agreement for small n

for n in range(1, 6):
    tours = list(all_tournaments(n))
    n_trans = sum(transitivity_report(G).verdict for G in tours)
    assert all(transitivity_report(G).all_agree for G in tours)
    print(f"n={n}: {len(tours):5} labelled tournaments, {n_trans:4} transitive")

# ## Random tournaments are rarely transitive
#
# A uniformly random tournament on n vertices is transitive with
# probability n! / 2^C(n,2), which is 120/1024 for n = 5.

rng = random.Random(1)
hits = sum(transitivity_report(random_tournament(5, rng)).verdict for _ in range(4000))
print(f"transitive among 4000 random 5-vertex tournaments: {hits} (expected about {4000 * 120 / 1024:.0f})")
