"""Cartan data, Laurent arithmetic, quantum integers.

Everything downstream is built from two currencies: exact Laurent
polynomials in q (graded dimensions) and a symmetrizable Cartan datum
with its Q-matrix of bivariate polynomials.
"""

from tensoralg.cartan import b2, default_q_matrix, type_a
from tensoralg.laurent import qint

# Quantum integers: bar-invariant, specialize to n at q = 1.
for n in range(5):
    p = qint(n, 1)
    print(f"[{n}] = {p.text():20}  at q=1: {p.eval_at_1()}")

# A Cartan datum knows its symmetrized pairing.
a2 = type_a(2)
alpha1, alpha2 = a2.simple_root(0), a2.simple_root(1)
print("\nA2 pairings:")
print("  <a1,a1> =", a2.pairing(alpha1, alpha1))
print("  <a1,a2> =", a2.pairing(alpha1, alpha2))

# B2 has unequal symmetrizers; the Khovanov-Lauda Q-matrix stays
# homogeneous for the right degree assignment (deg u = 2 d_i).
bb = b2()
q = default_q_matrix(bb)
print("\nB2 symmetrizers:", bb.sym)
print("Q_12 monomials {(u-exp, v-exp): coeff}:", q.entry(0, 1))

# JSON round trip for configuration files.
blob = bb.to_json()
blob["Q"] = q.to_json()
print("\ndatum JSON keys:", sorted(blob))
