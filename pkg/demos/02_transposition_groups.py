"""From involutions to geometry: enumerating 3-transposition classes.

A class of involutions D with o(de) <= 3 for all pairs turns into a partial
triple system: points are the involutions, and {d, e, ded} is a line whenever
de has order 3.  Three element models cover the catalog: plain permutations,
affine maps over F_p^m, and affine maps over GF(4)^3.
"""

from matsuo2 import fischer, transposition
from matsuo2.transposition import (
    Permutation, conjugacy_class, fischer_from_class, preset, product_order,
)

# Transpositions of Sym(4): six involutions, and the class closes after BFS
# conjugation by the three adjacent transpositions.
gens, seed = preset("sym4")
cls = conjugacy_class(gens, seed)
print("Sym(4) transposition class:", [e.label() for e in cls.elements])

sp = fischer_from_class(cls)
print("its Fischer space:", sp.n_points, "points,", len(sp.lines),
      "lines (the complete quadrilateral)")

# Product orders decide collinearity.
d = Permutation.from_cycles(4, "(1 2)")
e = Permutation.from_cycles(4, "(1 3)")
f = Permutation.from_cycles(4, "(3 4)")
print("\no((1 2)(1 3)) =", product_order(d, e), " -> collinear")
print("o((1 2)(3 4)) =", product_order(d, f), " -> not collinear")

# The nine maps x -> c - x on F_3^2 give the affine plane of order 3.
sp = fischer_from_class(conjugacy_class(*preset("3_2_2")))
print("\ninversion maps on F_3^2:", sp.n_points, "points,",
      len(sp.lines), "lines (the affine plane)")

# Affine models: the Weyl group of D4 and the group 3^3 : Sym(4).
for name in ("w_d4", "3_3_sym4"):
    cls = conjugacy_class(*preset(name))
    print(f"{name}: class of size {cls.size()}")

# The largest catalog entry: pairs [v, g] with v in GF(4)^3, g a 3x3 matrix.
cls = conjugacy_class(*preset("su32"))
print("su32: class of size", cls.size())
print("  a few members:", ", ".join(e.label() for e in cls.elements[:2]))

# Generator files round-trip through the .gens format.
text = transposition.gens_to_text(*preset("su32"))
print("\n.gens header and first generator:")
print("\n".join(text.splitlines()[:2]))
gens2, seed2 = transposition.parse_gens(text)
print("round trip class size:", conjugacy_class(gens2, seed2).size())
