"""Walkthrough: Orlicz norms, the iterated N-norms, and the delta transform.

Shows grid validation of user functions, the l_p specialization, the
[1/2, e] sandwich for admissible fixtures, why log(1+t) is rejected, and the
modulus-to-Orlicz integral transform with its two-sided bound.
"""

import math
import random

from interlace import (
    OrliczSpec,
    delta_transform,
    modulus_fixture,
    n_norm,
    orlicz_fixture,
    orlicz_norm,
    validate_modulus,
    validate_orlicz,
)

print("== grid validation of built-in fixtures ==")
for key in ("identity", "square", "sqrt", "log1p", "huber", "t_minus_log1p"):
    report = validate_orlicz(orlicz_fixture(key))
    status = "ok" if report.ok else f"violations: {report.violations[0]}"
    print(f"  {key:<15} {status}")

print("\n== Orlicz norm specializes to l_p for phi = t^p ==")
vec = [3.0, 4.0]
for p in (1.0, 2.0, 3.0):
    got = orlicz_norm(vec, orlicz_fixture(f"pow:{p}"))
    want = sum(abs(v) ** p for v in vec) ** (1 / p)
    print(f"  p={p}: {got:.10f}  (l_p value {want:.10f})")

print("\n== N-norm sandwich against the Orlicz norm ==")
rng = random.Random(3)
for key in ("identity", "huber", "t_minus_log1p"):
    spec = orlicz_fixture(key)
    lo, hi = math.inf, 0.0
    for _ in range(300):
        v = [rng.uniform(-3, 3) for _ in range(rng.randint(1, 15))]
        base = orlicz_norm(v, spec)
        if base == 0.0:
            continue
        ratio = n_norm(v, spec) / base
        lo, hi = min(lo, ratio), max(hi, ratio)
    print(f"  {key:<15} ratio range [{lo:.4f}, {hi:.4f}]  (allowed [0.5, {math.e:.4f}])")

print("\n== why log(1+t) is rejected by n_norm ==")
forced = OrliczSpec(math.log1p, True, True, "log1p-forced")
vec = [1e-6, 1e6]
print(f"  N(1e-6, 1e6) = {n_norm(vec, forced):.3e}")
print(f"  Orlicz norm  = {orlicz_norm(vec, forced):.3e}")
print("  slope limit at infinity is 0, so the first slot collapses; the")
print("  declared-flag precondition keeps this fixture out of n_norm")

print("\n== delta transform of a convexity modulus ==")
for key in ("identity", "rational"):
    mod = modulus_fixture(key)
    assert validate_modulus(mod).ok
    print(f"  modulus {key!r}:")
    for t in (0.1, 0.5, 1.0, 2.0):
        val = delta_transform(mod, t)
        print(
            f"    t={t:<4} d*(t/2)={mod.fn(t / 2):.6f} <= delta={val:.6f} <= d*(t)={mod.fn(t):.6f}"
        )
