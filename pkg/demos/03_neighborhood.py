"""
Neighbourhood structure: N1, N2, N3, N4, T1, LSC
================================================

Label noise is injected into well separated clusters. Every neighbourhood
measure grows as more boundary points appear.
"""
from datacomplexity import lsc, n1, n2, n3, n4, t1
from datacomplexity.synth import flip_labels, make_alternating_line, make_clusters

clean = make_clusters(60, 2, separation=6.0, spread=1.0, seed=1)
print(f"{'noise':>6} {'N1':>6} {'N2':>6} {'N3':>6} {'N4':>6} {'T1':>6} {'LSC':>6}")
for frac in (0.0, 0.05, 0.1, 0.2, 0.4):
    d = flip_labels(clean, frac, seed=1) if frac else clean
    vals = (n1(d), n2(d), n3(d), n4(d, seed=0), t1(d), lsc(d))
    print(f"{frac:6.2f} " + " ".join(f"{v:6.3f}" for v in vals))

# the worst case: every nearest neighbour is an enemy
d = make_alternating_line(10)
print(f"\nalternating line: N1={n1(d):.2f} N3={n3(d):.2f} T1={t1(d):.2f} LSC={lsc(d):.2f}")
