"""Concentration bounds and the intervals they induce.

Four tail bounds on Pr(|R - rho| > t) are available: a Bernstein-type
bound plus three sub-Gaussian bounds with exponent divisors 8, 4, 2.
Solving bound = alpha gives a symmetric interval around rho; tighter
exponents give narrower intervals, and wide intervals for small |rho|
can stick out of [-1, 1] entirely.
"""

from corrconc import ModelParams, TailBoundKind, coverage_interval, tail_bound

KINDS = (
    TailBoundKind.BERNSTEIN,
    TailBoundKind.CONSERVATIVE,
    TailBoundKind.AGGRESSIVE,
    TailBoundKind.MEGA_AGGRESSIVE,
)

params = ModelParams(rho=0.56, n=10)

print("Tail bounds at a few deviations (rho=0.56, n=10):")
print("  t      " + "".join(f"{k.value:>12}" for k in KINDS))
for t in (0.1, 0.25, 0.5, 0.75, 1.0):
    row = "".join(f"{tail_bound(k, params, t):12.4f}" for k in KINDS)
    print(f"  {t:.2f} {row}")
print("(values above 1 are vacuous; they clamp to 1 as probabilities)")

print("\n95% coverage intervals by bound kind:")
for kind in KINDS:
    iv = coverage_interval(kind, params, alpha=0.05)
    tag = " [sticks out of [-1, 1]]" if iv.clipped else ""
    print(f"  {kind.value:>9}: ({iv.lower:+.4f}, {iv.upper:+.4f}) width {2 * iv.half_width:.4f}{tag}")

print("\nInterval width shrinks as |rho| grows (tightest kind, n=10):")
for rho in (0.0, 0.25, 0.56, 0.75, 0.95):
    iv = coverage_interval(TailBoundKind.MEGA_AGGRESSIVE, ModelParams(rho=rho, n=10), 0.05)
    print(f"  rho={rho:4.2f}: half-width {iv.half_width:.4f}  clipped={iv.clipped}")

print("\n...and as n grows (rho=0):")
for n in (3, 5, 10, 30, 100):
    iv = coverage_interval(TailBoundKind.MEGA_AGGRESSIVE, ModelParams(rho=0.0, n=n), 0.05)
    print(f"  n={n:4d}: half-width {iv.half_width:.4f}  clipped={iv.clipped}")
