"""Closed-form approximations against the exact series.

E(R) ~ sqrt(1 - 1/n) rho and var(R) ~ (1 - rho^2)^2 / (n - 1) are cheap
closed forms; this script shows how fast they close in on the exact
values as n grows, and how the two variance upper bounds and the
sub-Gaussian moment envelope sit above the truth.
"""

import math

from corrconc import (
    ModelParams,
    central_even_moment_bound,
    central_moment,
    exact_variance,
    mean_approx,
    moment,
    var_approx,
    variance_bounds,
)

rho = 0.56

print("Mean: exact vs sqrt(1 - 1/n) rho")
print("  n     E(R)        approx      |gap| * n")
for n in (5, 10, 20, 40, 80, 160):
    params = ModelParams(rho=rho, n=n)
    exact = moment(1, params).value
    approx = mean_approx(params)
    print(f"  {n:4d}  {exact:.6f}   {approx:.6f}   {abs(exact - approx) * n:.4f}")

print("\nVariance: exact vs (1 - rho^2)^2/(n - 1), and the two upper bounds")
print("  n     exact       approx      aggressive  conservative")
for n in (5, 10, 20, 40, 80, 160):
    params = ModelParams(rho=rho, n=n)
    bounds = variance_bounds(params)
    print(
        f"  {n:4d}  {exact_variance(params):.6f}   {bounds.approx:.6f}   "
        f"{bounds.upper_aggressive:.6f}   {bounds.upper_conservative:.6f}"
    )

# The error of the variance approximation is O(n^-2): scaling it by n^2
# gives a roughly flat sequence.
print("\nn^2 * |exact variance - approx|:")
for n in (10, 20, 40, 80, 160):
    params = ModelParams(rho=rho, n=n)
    print(f"  n={n:4d}: {n * n * abs(exact_variance(params) - var_approx(params)):.4f}")

print("\nCentral even moments against the sub-Gaussian envelope (n=30):")
params = ModelParams(rho=rho, n=30)
for m in (1, 2, 3):
    exact = central_moment(2 * m, params)
    envelope = central_even_moment_bound(m, params)
    print(f"  order {2 * m}: exact {exact:.3e} <= envelope {envelope:.3e}")

# The tightest tail bound rests on dropping the alternating high-order
# tail of the binomial expansion of E{(R - rho)^(2m)} in powers of E(R^2).
# That step has no closed error bound, so its size is reported here, next
# to the envelope term that is kept, rather than asserted anywhere.
print("\nDropped alternating binomial tail vs the retained envelope term:")
print("  n     m   dropped tail   retained term")
for n in (10, 30, 100):
    params = ModelParams(rho=rho, n=n)
    e2 = moment(2, params).value
    for m in (2, 3):
        tail = sum(
            math.comb(2 * m, j) * (-1.0) ** j * e2**j * rho ** (2 * (m - j))
            for j in range(m + 1, 2 * m + 1)
        )
        retained = (
            math.factorial(2 * m) / (2**m * math.factorial(m)) * (e2 - rho * rho) ** m
        )
        print(f"  {n:4d}  {m}   {tail:+.3e}     {retained:+.3e}")
