"""Nilpotent Matsuo algebras over GF(2).

The algebra of a Fischer space has the points as basis and multiplication

    x * y = 0            if x = y or x, y not collinear,
    x * y = x + y + x^y  if x, y collinear (x^y the third point on their line).

Every element squares to zero (characteristic 2), products of two distinct
points on a line all equal the sum of the line's three points, and the sum s
of all points annihilates the algebra.  The reduced algebra is the quotient
by <s>; its basis drops the highest-index point, whose image is the sum of
all the others.

Algebra elements are GF(2) coefficient vectors stored as int bitmasks
(bit i = basis element i), matching the packed vectors of the gf module.
"""

from __future__ import annotations

from . import fischer
from .gf import Field, FieldMatrix, mask_from_support, vec_support

GF2 = Field(1)


class NilpotentMatsuoAlgebra:
    """Structure constants of a nilpotent Matsuo algebra; immutable."""

    __slots__ = ("space", "dim", "reduced", "basis_labels", "table", "_ad_rows")

    def __init__(self, space, dim, reduced, basis_labels, table) -> None:
        self.space = space
        self.dim = dim
        self.reduced = reduced
        self.basis_labels = basis_labels
        self.table = table  # table[i][j]: product of basis i and j as a mask
        self._ad_rows = None

    @property
    def eta(self) -> int:
        """The scalar in the point product; fixed to 1 (rescaling removes it)."""
        return 1

    def ad_rows(self, i: int) -> tuple[int, ...]:
        """Rows of the left-multiplication matrix of basis element i."""
        if self._ad_rows is None:
            n = self.dim
            all_rows = []
            for a in range(n):
                rows = [0] * n
                ta = self.table[a]
                for j in range(n):
                    m = ta[j]
                    while m:
                        low = m & -m
                        rows[low.bit_length() - 1] |= 1 << j
                        m ^= low
                all_rows.append(tuple(rows))
            self._ad_rows = tuple(all_rows)
        return self._ad_rows[i]

    def __repr__(self) -> str:
        kind = "reduced " if self.reduced else ""
        return f"NilpotentMatsuoAlgebra({kind}dim={self.dim} over {self.space!r})"


def build(space: fischer.FischerSpace) -> NilpotentMatsuoAlgebra:
    """Populate structure constants from the space's wedge table."""
    n = space.n_points
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        cm = space.collinear[x]
        for y in range(x + 1, n):
            if (cm >> y) & 1:
                m = (1 << x) | (1 << y) | (1 << space._wedge[(x, y)])
                table[x][y] = m
                table[y][x] = m
    alg = NilpotentMatsuoAlgebra(
        space, n, False, space.labels, tuple(tuple(r) for r in table)
    )
    for i in range(n):
        assert alg.table[i][i] == 0, "basis square must vanish"
        for j in range(i):
            assert alg.table[i][j] == alg.table[j][i], "product must be commutative"
    return alg


def _fold(mask: int, n: int) -> int:
    """Rewrite a full-algebra mask modulo s = sum of all points, dropping point n-1."""
    if (mask >> (n - 1)) & 1:
        mask ^= (1 << n) - 1
    return mask


def reduce(alg: NilpotentMatsuoAlgebra) -> NilpotentMatsuoAlgebra:
    """The quotient by the annihilator <s>, on basis points 0..n-2."""
    if alg.reduced:
        raise ValueError("algebra is already reduced")
    n = alg.dim
    table = tuple(
        tuple(_fold(alg.table[i][j], n) for j in range(n - 1)) for i in range(n - 1)
    )
    return NilpotentMatsuoAlgebra(alg.space, n - 1, True, alg.basis_labels[:-1], table)


def line_nilpotent(alg: NilpotentMatsuoAlgebra, line) -> int:
    """The sum of the three points of a line, as an algebra element."""
    t = tuple(sorted(line))
    if not alg.space.is_line(t):
        raise ValueError(f"{line!r} is not a line of the underlying space")
    m = mask_from_support(t)
    if alg.reduced:
        m = _fold(m, alg.space.n_points)
    return m


def multiply(alg: NilpotentMatsuoAlgebra, u: int, v: int) -> int:
    """Bilinear extension of the structure constants to arbitrary elements."""
    if u.bit_length() > alg.dim or v.bit_length() > alg.dim:
        raise ValueError("element does not fit the algebra's dimension")
    acc = 0
    table = alg.table
    uu = u
    while uu:
        lu = uu & -uu
        ti = table[lu.bit_length() - 1]
        vv = v
        while vv:
            lv = vv & -vv
            acc ^= ti[lv.bit_length() - 1]
            vv ^= lv
        uu ^= lu
    return acc


def ad_matrix(alg: NilpotentMatsuoAlgebra, u: int) -> FieldMatrix:
    """Matrix of v -> u*v in the algebra basis, over GF(2)."""
    rows = [0] * alg.dim
    uu = u
    while uu:
        low = uu & -uu
        for r, ar in enumerate(alg.ad_rows(low.bit_length() - 1)):
            rows[r] ^= ar
        uu ^= low
    return FieldMatrix(GF2, alg.dim, alg.dim, rows)


def annihilator(alg: NilpotentMatsuoAlgebra) -> tuple[int, ...]:
    """Basis of {v : v*w = 0 for all w}, via the kernel of the stacked ad matrices.

    For the full algebra of a connected space the result must be the span of
    the all-points sum; a mismatch means corrupted structure constants.  For
    a reduced algebra the result is checked to be trivial.
    """
    rows = []
    for i in range(alg.dim):
        rows.extend(alg.ad_rows(i))
    stacked = FieldMatrix(GF2, alg.dim * alg.dim, alg.dim, rows)
    basis = stacked.kernel()
    if alg.reduced:
        if basis != ():
            raise RuntimeError("reduced algebra has a nontrivial annihilator")
    else:
        s = (1 << alg.dim) - 1
        if basis != (s,):
            raise RuntimeError(
                f"annihilator is not spanned by the all-points sum: {basis!r}"
            )
    return basis


# -- combinatorial product predictions ----------------------------------------
#
# The product of a point with a line nilpotent, and of two line nilpotents,
# is determined by the geometry alone.  These predictors recompute the
# products from collinearity data only, independently of the structure
# constants, and serve as oracles against multiply().


def _line_of(space, x, p):
    return tuple(sorted((x, p, space._wedge[(x, p)])))


def predict_point_line(space: fischer.FischerSpace, x: int, line) -> int:
    """Predicted product x * (line nilpotent), from the geometry alone.

    Cases: zero when x is on the line or sees none of it; the sum of the two
    joining lines when x and the line span a quadrilateral; x + line + m with
    m the parallel line avoiding x when they span an affine plane.
    """
    t = tuple(sorted(line))
    if not space.is_line(t):
        raise ValueError(f"{line!r} is not a line of the space")
    if x in t:
        return 0
    lm = mask_from_support(t)
    joiners = [p for p in t if space.are_collinear(x, p)]
    if not joiners:
        return 0
    plane = fischer.generated_subspace(space, {x, *t})
    if len(plane) == 6:
        m, n = (_line_of(space, x, p) for p in joiners)
        return mask_from_support(m) ^ mask_from_support(n)
    if len(plane) == 9:
        inside = fischer._lines_inside(space, plane)
        parallels = [
            u for u in inside
            if u != t and not set(u) & set(t) and x not in u
        ]
        if len(parallels) != 1:
            raise fischer.InvalidSpaceError(
                f"expected one parallel to {t} avoiding {x}, got {parallels!r}"
            )
        return (1 << x) ^ lm ^ mask_from_support(parallels[0])
    raise fischer.InvalidSpaceError(
        f"point {x} and line {t} span a {len(plane)}-point subspace"
    )


def _is_affine_plane(space, pts) -> bool:
    if len(pts) != 9:
        return False
    inside = fischer._lines_inside(space, pts)
    return len(inside) == 12 and all(
        sum(1 for u in inside if p in u) == 4 for p in pts
    )


def predict_line_line(space: fischer.FischerSpace, line1, line2) -> int:
    """Predicted product of two line nilpotents, from the geometry alone.

    Equal lines give zero.  Intersecting lines give the sum of the two
    nilpotents in a quadrilateral, or the four points off both lines in an
    affine plane.  Disjoint lines spanning an affine plane give the sum of
    its nine points; other disjoint pairs expand point by point.
    """
    t1, t2 = tuple(sorted(line1)), tuple(sorted(line2))
    for t in (t1, t2):
        if not space.is_line(t):
            raise ValueError(f"{t!r} is not a line of the space")
    if t1 == t2:
        return 0
    common = set(t1) & set(t2)
    if common:
        plane = fischer.generated_subspace(space, set(t1) | set(t2))
        if len(plane) == 6:
            return mask_from_support(t1) ^ mask_from_support(t2)
        if len(plane) == 9:
            off = plane - set(t1) - set(t2)
            return mask_from_support(off)
        raise fischer.InvalidSpaceError(
            f"lines {t1} and {t2} span a {len(plane)}-point subspace"
        )
    plane = fischer._generated_subspace_capped(space, set(t1) | set(t2), 9)
    if plane is not None and _is_affine_plane(space, plane):
        return mask_from_support(plane)
    return (
        predict_point_line(space, t1[0], t2)
        ^ predict_point_line(space, t1[1], t2)
        ^ predict_point_line(space, t1[2], t2)
    )


# -- scalar extension -----------------------------------------------------------


def multiply_ext(alg: NilpotentMatsuoAlgebra, field: Field, u: int, v: int) -> int:
    """Product of two packed GF(2^k) coefficient vectors, same structure constants."""
    k = field.k
    mask = field.mask
    acc = 0
    for i in range(alg.dim):
        a = (u >> (i * k)) & mask
        if not a:
            continue
        ti = alg.table[i]
        for j in range(alg.dim):
            b = (v >> (j * k)) & mask
            if not b:
                continue
            c = field.mul(a, b)
            m = ti[j]
            while m:
                low = m & -m
                acc ^= c << ((low.bit_length() - 1) * k)
                m ^= low
    return acc


# -- export ----------------------------------------------------------------------


def to_json_dict(alg: NilpotentMatsuoAlgebra) -> dict:
    """JSON-ready description; products list nonzero entries with i <= j."""
    products = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if alg.table[i][j]:
                products.append([i, j, vec_support(alg.table[i][j])])
    return {
        "space": alg.space.meta.name if alg.space.meta else None,
        "dim": alg.dim,
        "reduced": alg.reduced,
        "basis_labels": list(alg.basis_labels),
        "products": products,
    }
