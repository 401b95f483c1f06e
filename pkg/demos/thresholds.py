"""Identification thresholds: exact binomial tails next to a quick simulation."""
from latentmark.metrics import empirical_fpr, theoretical_fpr, tpr_threshold

print(" bits  k   exact FPR   simulated (1e5 pairs)")
for n in (16, 32, 48, 56, 64, 128):
    rate, se = empirical_fpr(n, trials=100_000)
    print(f"{n:5d} {tpr_threshold(n):3d}   {theoretical_fpr(n):.5f}    {rate:.5f} +/- {se:.5f}")
