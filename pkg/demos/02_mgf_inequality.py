"""The moment generating function bound and where it is tight.

For every real t the centered indicator satisfies

    E exp(t X)  <=  exp(Q(p)^2 t^2),

and the inequality is an equality at exactly two points: t = 0 and the
extremal point t* = 2 log((1-p)/p).  Equivalently the profile
g(t) = log-MGF(t) / t^2 rises to its supremum Q(p)^2 at t*.  That is the
whole reason Q(p) is the exact norm and not just an upper bound.
"""

import numpy as np

from subgauss import g_value, kearns_saul_gap, lambda_star, q_norm

p = 0.1
q2 = q_norm(p).value ** 2
t_star = lambda_star(p)

print(f"p = {p}:  Q^2 = {q2:.12f},  t* = {t_star:.12f}")
print()
print("      t        gap = Q^2 t^2 - logMGF       g(t) = logMGF/t^2")
for t in [0.5, 1.0, 2.0, t_star - 0.5, t_star, t_star + 0.5, 8.0, 20.0]:
    gap = kearns_saul_gap(p, t)
    g = g_value(p, t)
    marker = "  <- extremal point" if t == t_star else ""
    print(f"{t:11.6f}   {gap:22.15e}   {g:.15f}{marker}")

print()
print("the gap never goes negative; scan a sign-symmetric log grid:")
grid = np.geomspace(1e-6, 60.0, 2000)
worst = min(
    min(kearns_saul_gap(p, float(t)) for t in grid),
    min(kearns_saul_gap(p, float(-t)) for t in grid),
)
print(f"  min gap over 4000 points = {worst:.3e}")

print()
print("g approaches the variance limit p(1-p)/2 at t -> 0:")
for t in (1e-1, 1e-3, 1e-6):
    print(f"  g({t:g}) = {g_value(p, t):.15f}")
print(f"  limit    = {p * (1 - p) / 2:.15f}")
print(f"  sup      = {q2:.15f}  (attained at t*, above the t -> 0 value)")
