"""
Dimensionality and class balance: T2, T3, T4, C1, C2
====================================================

Adding redundant copies of a feature raises the feature count but not the
number of principal components needed for 95% of the variance, so T4 drops.
The balance measures only look at class sizes.
"""
import numpy as np

from datacomplexity import Dataset, c1, c2, t2, t3, t4
from datacomplexity.dimensionality import pca_summary

rng = np.random.default_rng(4)
base = rng.normal(size=(100, 2))
y = np.where(base[:, 0] > 0, "pos", "neg")
for copies in (0, 2, 6):
    X = np.hstack([base] + [base[:, :1] * (k + 2) for k in range(copies)])
    d = Dataset.from_arrays(X, y)
    pca = pca_summary(d)
    print(f"m={d.m:2d}  components for 95%={pca.m_prime}  T2={t2(d):.3f}  T3={t3(d):.3f}  T4={t4(d):.3f}")

print()
for counts in ((50, 50), (70, 30), (90, 10), (98, 2), (40, 30, 20, 10)):
    labels = np.repeat([f"c{k}" for k in range(len(counts))], counts)
    d = Dataset.from_arrays(np.arange(labels.size, dtype=float), labels)
    print(f"class sizes {str(counts):18s} C1={c1(d):.3f}  C2={c2(d):.3f}")
