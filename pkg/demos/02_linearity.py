"""
Linear separability: L1, L2, L3
===============================

A soft-margin linear classifier is fitted on min-max scaled data with C = 1.
L2 is its training error and L3 its error on same-class interpolants. L1
sums the slacks, so it stays slightly positive even for separable data:
in scaled units the hard margin would need multipliers larger than C.
"""
from datacomplexity import l1, l2, l3, train_linear
from datacomplexity.synth import make_clusters, make_rings

for name, d in [("far clusters", make_clusters(50, 2, separation=10.0, spread=1.0, seed=0)),
                ("touching clusters", make_clusters(50, 2, separation=2.0, spread=1.0, seed=0)),
                ("rings", make_rings(100, seed=0))]:
    print(f"{name:18s} L1={l1(d):.4f}  L2={l2(d):.3f}  L3={l3(d, seed=0):.3f}")

# a larger C lets the multipliers reach the hard-margin solution
d = make_clusters(50, 2, separation=10.0, spread=1.0, seed=0)
for C in (1.0, 10.0, 100.0):
    model = train_linear(d, C=C)
    print(f"C={C:<6g} L1={l1(d, C=C):.2e}  support vectors={int((model.alphas > 0).sum())}")

# rings are the concave case: interpolants cross the inner ring and L3 > L2
