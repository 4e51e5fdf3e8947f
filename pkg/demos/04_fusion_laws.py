"""Line decompositions, fusion laws, and when the grading survives.

Each line nilpotent splits the algebra into generalized eigenspaces for 0
and 1.  Multiplying all basis pairs of the two parts and projecting back
yields the observed fusion law; the decomposition is Z/2Z-graded when
0*0 -> 0, 0*1 -> 1, 1*1 -> 0.  The grading holds for every line exactly on
spaces of symplectic type and on the affine plane, and the failures come
with explicit witness pairs.
"""

from matsuo2 import decomp, fischer, matsuo
from matsuo2.gf import vec_support

def show_line(alg, line):
    v = decomp.line_verdict(alg, line)
    d = v.decomposition
    print(f"  line {line}: gen dims {d.gen_dims()}, eigen dims "
          f"{(d.eigen0_dim, d.eigen1_dim)}, semisimple={d.semisimple}, "
          f"fusion {v.fusion.to_json_dict()}, graded={v.z2_graded}")

print("the quadrilateral (1*1 is empty, so the grading extends to Z):")
cq_alg = matsuo.build(fischer.catalog("cq"))
show_line(cq_alg, (0, 1, 2))

print("\nthe affine plane (0-part needs generalized eigenvectors):")
ag_alg = matsuo.build(fischer.catalog("ag23"))
show_line(ag_alg, ag_alg.space.lines[0])
print("after quotienting the annihilator the operators become semisimple:")
show_line(matsuo.reduce(ag_alg), ag_alg.space.lines[0])

print("\ngrading verdicts across the catalog:")
for name in fischer.CATALOG_NAMES:
    alg = matsuo.build(fischer.catalog(name))
    gv = decomp.classify_space(alg)
    graded = sum(1 for v in gv.verdicts if v.z2_graded)
    print(f"  {name:10s} graded={str(gv.graded):5s} "
          f"({graded}/{len(gv.verdicts)} lines, {len(gv.good_lines)} good lines)")

print("\na witness pair for a failing line of 3^3:Sym(4):")
alg = matsuo.build(fischer.catalog("3_3_sym4"))
gv = decomp.classify_space(alg)
bad = next(v for v in gv.verdicts if not v.z2_graded)
w = bad.witness
print(f"  line {bad.line}: u={vec_support(w.u)} v={vec_support(w.v)}")
print(f"  u*v has 1-component supported on {vec_support(w.bad_component)}")

print("\nstructured eigenbasis on a symplectic space (w_a4):")
alg = matsuo.build(fischer.catalog("w_a4"))
sb = decomp.symplectic_structured_basis(alg, alg.space.lines[0])
print(f"  0-part = 3 line points + {len(sb.quad_sums)} quadrilateral sums "
      f"+ {len(sb.p0_points)} isolated points")
print(f"  1-part spanned by {len(sb.one_part)} products line*z")

print("\ntwo quadrilaterals through one line meet in one of two ways:")
for name in ("w_a4", "w_d4"):
    sp = fischer.catalog(name)
    t = sp.lines[0]
    quads = fischer.cqs_through_line(sp, t)
    res = decomp.cq_pair_case(sp, t, quads[0], quads[1])
    extra = f"common point {res.w}" if res.case == "a" else \
            f"third quadrilateral {sorted(res.third_quad)}"
    print(f"  {name}: case ({res.case}), {extra}")
