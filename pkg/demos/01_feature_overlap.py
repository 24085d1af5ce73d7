"""
Feature overlap: F1, F1v, F2, F3, F4
====================================

Two Gaussian blobs are pulled apart step by step. The feature-based
measures look at one axis at a time, so they react as soon as a single
feature starts to separate the classes.
"""
from datacomplexity import f1, f1v, f2, f3, f4
from datacomplexity.synth import make_clusters

print(f"{'sep':>5} {'F1':>7} {'F1v':>7} {'F2':>7} {'F3':>7} {'F4':>7}")
for sep in (0.0, 0.5, 1.0, 2.0, 4.0):
    # separation 0 would be rejected, so start from a tiny offset
    d = make_clusters(60, 2, separation=max(sep, 1e-6), spread=1.0, seed=3, n_features=3)
    print(f"{sep:5.1f} {f1(d):7.3f} {f1v(d):7.3f} {f2(d):7.3f} {f3(d):7.3f} {f4(d):7.3f}")

print("\nall values lie in [0, 1]; higher means more overlap")
