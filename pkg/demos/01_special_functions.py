"""Tour of the special-function layer.

Walks the Lerch transcendent through its four evaluation strategies, then
visits the surrounding cast: Hurwitz zeta and its s-derivative, the
Glaisher-Kinkelin constant, the 2F1 shortcut, and Bessel K.
"""
import cmath
import math

from lerchlab import (
    LerchStrategy,
    bessel_k,
    gauss_2f1_a1,
    glaisher_constant,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    lerch_phi,
    riemann_zeta,
)

print("=== Lerch transcendent Phi(z, s, v) ===")
print()
print("Strategy 1: negative integer s gives an exact rational function of z.")
print("  Phi(z, 0, v) = 1/(1-z); at z = 3+1j:")
print("   ", lerch_phi(3 + 1j, 0, 0.7), "vs", 1 / (1 - (3 + 1j)))
print()

print("Strategy 2: direct series for |z| <= 0.9 with a geometric tail bound.")
print("  Phi(-0.9, 2, 1) =",
      lerch_phi(-0.9, 2, 1, strategy=LerchStrategy.DIRECT_SERIES).real)
print("  Phi(-1, 2, 1) =", lerch_phi(-1, 2, 1).real,
      " (dispatched on the unit circle; pi^2/12 =", math.pi ** 2 / 12, ")")
print()

print("Strategy 3: z a root of unity decomposes into Hurwitz zetas.")
z3 = cmath.exp(2j * math.pi / 3)
print("  Phi(e^{2 pi i/3}, 2, 1) =", lerch_phi(z3, 2, 1))
print()

print("Strategy 4: the Gamma-integral representation covers Re s > 0 off")
print("the cut; it is what the dispatcher falls back to for generic z.")
print("  Phi(0.95, 1.5, 1.2) =", lerch_phi(0.95, 1.5, 1.2))
print()

print("=== Hurwitz zeta and friends ===")
print()
print("zeta(2, 1) =", hurwitz_zeta(2, 1).real, "(pi^2/6 =", math.pi ** 2 / 6, ")")
print("zeta(-1) =", riemann_zeta(-1).real, "(-1/12)")
print("zeta'(0, 1) =", hurwitz_zeta_sderiv(0, 1).real,
      "(-log(2 pi)/2 =", -0.5 * math.log(2 * math.pi), ")")
print()
print("Glaisher-Kinkelin A = exp(1/12 - zeta'(-1)) =", glaisher_constant())
print("  (computed from the Euler-Maclaurin s-derivative, not hard-coded)")
print()

print("=== 2F1(a, 1; a+1; z) = a * Phi(z, 1, a) ===")
print("2F1(1, 1; 2; 1/2) =", gauss_2f1_a1(1.0, 0.5).real,
      "(2 log 2 =", 2 * math.log(2), ")")
print()

print("=== Modified Bessel K by its cosh integral ===")
x = 1.7
print("K_{1/2}(%.1f) =" % x, bessel_k(0.5, x).real,
      "(closed form:", math.sqrt(math.pi / (2 * x)) * math.exp(-x), ")")
