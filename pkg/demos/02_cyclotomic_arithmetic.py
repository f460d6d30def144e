#!/usr/bin/env python3
"""Exact cyclotomic arithmetic: canonical forms and conductor minimization.

Every value is stored reduced against the cyclotomic polynomial at the
smallest possible conductor, so equal numbers always have identical
representations (and hash equal).
"""

from fusionrings.cyclo import Cyclotomic, root_of_unity

print("== canonical forms ==")
print("zeta_4^2          =", root_of_unity(4, 2), " (conductor", root_of_unity(4, 2).conductor, ")")
z6 = root_of_unity(6)
print("zeta_6            =", z6, " (conductor", z6.conductor, ")")
print("zeta_6^3          =", z6 * z6 * z6)

print("\n== golden-ratio identities at conductor 5 ==")
a = root_of_unity(5) + root_of_unity(5, 4)
b = root_of_unity(5, 2) + root_of_unity(5, 3)
print("(z5 + z5^4)               ~", f"{a.numeric().real:+.10f}")
print("(z5^2 + z5^3)             ~", f"{b.numeric().real:+.10f}")
print("their exact product       =", a * b)
print("their exact sum           =", a + b)

print("\n== field operations ==")
x = Cyclotomic.one() + root_of_unity(3)
print("(1 + z3)^(-1)             =", x.inverse())
print("check, x * x^(-1)         =", x * x.inverse())
print("conjugate of zeta_5       =", root_of_unity(5).conjugate())

print("\n== rationality detection ==")
s = sum((root_of_unity(7, k) for k in range(1, 7)), Cyclotomic.zero())
print("sum of primitive 7th roots:", s, "rational part:", s.rational_part())
print("zeta_7 rational part      :", root_of_unity(7).rational_part())
