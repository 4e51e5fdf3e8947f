"""Tour of the built-in Fischer spaces.

A Fischer space here is a partial triple system: every line has exactly 3
points, two lines share at most one point, and any two intersecting lines
generate either the 6-point complete quadrilateral or the 9-point affine
plane of order 3.  Run this script directly; it prints as it goes.
"""

from matsuo2 import fischer

# The catalog ships seven spaces.  Point counts 6 and 9 are the two rank-3
# geometries; the remaining five are the rank-4 ones.
print("catalog:")
for name in fischer.CATALOG_NAMES:
    sp = fischer.catalog(name)
    print(f"  {name:10s} {sp.n_points:3d} points {len(sp.lines):4d} lines "
          f"symplectic={fischer.is_symplectic_type(sp)}")

# The quadrilateral: points a,b,c,x,y,z with a,b,c on the base line.
cq = fischer.catalog("cq")
a, b, c, x, y, z = range(6)
print("\nwedge products in the quadrilateral:")
print("  a^b =", cq.labels[fischer.wedge(cq, a, b)])
print("  x^b =", cq.labels[fischer.wedge(cq, x, b)])

# Two intersecting lines generate a plane; the type tells the geometry apart.
w_a4 = fischer.catalog("w_a4")
l1, l2 = w_a4.lines[0], next(t for t in w_a4.lines[1:] if set(t) & set(w_a4.lines[0]))
span = fischer.generated_subspace(w_a4, set(l1) | set(l2))
print(f"\ntwo intersecting lines of w_a4 generate {len(span)} points "
      f"({fischer.plane_type(w_a4, l1, l2).value})")

ag = fischer.catalog("ag23")
l1, l2 = ag.lines[0], next(t for t in ag.lines[1:] if set(t) & set(ag.lines[0]))
print(f"two intersecting lines of ag23 generate "
      f"{len(fischer.generated_subspace(ag, set(l1) | set(l2)))} points")

# Off-line points see 0, 2 or 3 points of a line, never exactly one.
idx = {lab: i for i, lab in enumerate(w_a4.labels)}
t = tuple(sorted((idx["(1 2)"], idx["(1 3)"], idx["(2 3)"])))
p0, p2, p3 = fischer.points_p0_p2(w_a4, t)
print(f"\nline {{(1 2),(1 3),(2 3)}} of w_a4: "
      f"|P0|={len(p0)} |P2|={len(p2)} |P3|={len(p3)}")
print("  the unique point seeing nothing of it:", w_a4.labels[p0[0]])

# Spaces round-trip through a plain text format.
import tempfile, os

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "cq.fischer")
    fischer.save_space(cq, path)
    again = fischer.load_space(path)
    print("\nfile round trip preserves the line set:", again.lines == cq.lines)
    print("\nthe file format itself:")
    print(fischer.space_to_text(cq))
