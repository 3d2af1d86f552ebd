"""Step through extended promotion by hand on a small poset.

Builds the three-element poset with two minimals under a common top,
promotes one labeling to its natural end, and shows the bookkeeping the
library exposes along the way: chains, frozen sets, sorting order, the
tangled test, and lifting a labeling into a larger poset.
"""

from itertools import permutations

from promotion_sorting import (
    Poset,
    chain,
    format_labeling,
    frozen_set,
    is_natural,
    is_tangled,
    lift_labeling,
    order,
    promote,
    promotion_path,
    standardize,
)

p = Poset(3, [(0, 2), (1, 2)], names=("a", "b", "top"))
labels = (3, 1, 2)

print("poset: a < top, b < top")
print("start:", format_labeling(labels))
print()

current = labels
step = 0
while not is_natural(p, current):
    result = promote(p, current)
    step += 1
    walked = " -> ".join(p.names[e] for e in result.chain)
    print(f"step {step}: label 1 walks {walked}, then everything shifts down")
    print(f"         {format_labeling(current)}  becomes  "
          f"{format_labeling(result.labels)}")
    current = result.labels
print()

print("order of the start labeling:", order(p, labels))
path = promotion_path(p, labels)
for i, entry in enumerate(path):
    frozen = sorted(p.names[e] for e in frozen_set(p, entry))
    print(f"after {i} steps the frozen elements are {frozen}")
print()

# a labeling is tangled when it needs the full n - 1 steps; this poset has
# none (every labeling sorts in at most one step), the 3-chain has two
print("is (3, 1, 2) tangled on the funnel?", is_tangled(p, labels))
c3 = chain(3)
tangled = [w for w in permutations((1, 2, 3)) if is_tangled(c3, w)]
print("tangled labelings of the 3-chain:", tangled)
for w in tangled:
    steps = " -> ".join(format_labeling(entry) for entry in promotion_path(c3, w))
    print(f"  {steps}")
print()

# lifting: insert two extra minimal elements below everything and push the
# old labels up to chosen slots; sorting order is forced by the top slot
lifted_poset, lifted = lift_labeling(p, labels, [2, 5])
print("lift (3, 1, 2) into a 5-element poset at slots 2 and 5:")
print("  lifted labels by element:", lifted)
print("  lifted order:", order(lifted_poset, lifted))
back = standardize(lifted_poset, lifted, range(2, 5))[1]
print("  standardizing the original block recovers:", back)
