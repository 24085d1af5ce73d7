"""
Full report and the command line
================================

compute_all runs every measure, isolates failures per measure and serializes
the result. The same report is available from the ``datacomplexity`` command.
"""
import os
import subprocess
import sys
import tempfile

import numpy as np

from datacomplexity import Dataset, RunParams, compute_all, serialize
from datacomplexity.report import format_table
from datacomplexity.synth import make_random

d = make_random(7, n=150, m=5, n_classes=3)
report = compute_all(d, params=RunParams(seed=0), jobs=4)
print(format_table(report))

# a measure that cannot run is reported, not raised: a single-class
# dataset has no class pair for the linear classifier
one = Dataset.from_arrays(np.arange(20, dtype=float), ["only"] * 20, name="one-class")
report = compute_all(one, selection=["L2", "C1"])
for name, r in report.measures.items():
    print(f"{name}: {r.status} ({r.reason})")
print(serialize(report, "csv").decode())

# the CLI: write a fixture, then measure it
work = tempfile.mkdtemp()
data = os.path.join(work, "rings.csv")
cli = [sys.executable, "-m", "datacomplexity.cli"]
subprocess.run(cli + ["synth", "rings", "--n", "80", "--seed", "3", "-o", data], check=True)
done = subprocess.run(cli + ["measure", data, "--measures", "F1,N3,L2,T2", "--format", "json"],
                      capture_output=True, text=True)
print(f"exit code {done.returncode}")
print(done.stdout)
