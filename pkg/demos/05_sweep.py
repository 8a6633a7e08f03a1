"""Empirical map of (alpha, beta) segments.

Every cell inside the proven region must come back fully real-rooted.
Cells outside it show how much room the sufficient condition leaves.
"""
from hutchinson.explorer import SweepConfig, empirical_beta, sweep

config = SweepConfig(alpha_grid=["13/4", "7/2", "19/5"], beta_grid=["4", "5", "8"], degrees=[6, 10],
                     samples_per_cell=20, seed=1)
print(sweep(config).to_csv(), end="")

scan = empirical_beta("7/2", 8, "1/8")
print("largest beta with every extremal sample real-rooted at alpha = 7/2, degree 8:", scan.beta)
