"""Per-line decompositions, fusion tables, and grading classification.

For a line nilpotent the only eigenvalues of its left multiplication are 0
and 1.  Each line therefore splits the algebra into the generalized
eigenspaces for 0 and 1; the 1-part is always a proper eigenspace, while the
0-part can be strictly larger than ker(ad) (the affine plane is the standard
example).  The fusion table records, for each pair of parts, which parts
their products meet, by exhaustive multiplication of basis pairs.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import fischer, matsuo
from .gf import FieldMatrix, span_equal, vec_support

GF2 = matsuo.GF2


@dataclass(frozen=True)
class LineDecomposition:
    """Generalized eigenspace decomposition of an algebra along one line."""

    line: tuple[int, int, int]
    dim: int
    basis0: tuple[int, ...]  # basis of ker(ad^N), echelonized
    basis1: tuple[int, ...]  # basis of ker((ad+1)^N) = proper 1-eigenspace
    eigen0_dim: int
    eigen1_dim: int
    semisimple: bool
    coord_matrix: FieldMatrix  # inverse of [basis0 | basis1] as columns

    def gen_dims(self) -> tuple[int, int]:
        return (len(self.basis0), len(self.basis1))

    def coords(self, v: int) -> int:
        return self.coord_matrix.matvec(v)

    def split(self, v: int) -> tuple[int, int]:
        """Components of v in the 0-part and the 1-part."""
        c = self.coords(v)
        d0 = len(self.basis0)
        v0 = 0
        for i in range(d0):
            if (c >> i) & 1:
                v0 ^= self.basis0[i]
        v1 = 0
        for i in range(len(self.basis1)):
            if (c >> (d0 + i)) & 1:
                v1 ^= self.basis1[i]
        return v0, v1

    def component_flags(self, v: int) -> tuple[bool, bool]:
        """Which parts a vector meets; cheaper than split()."""
        c = self.coords(v)
        d0 = len(self.basis0)
        return bool(c & ((1 << d0) - 1)), bool(c >> d0)

    def in_one_part(self, v: int) -> bool:
        f0, _ = self.component_flags(v)
        return not f0


def decompose_line(alg: matsuo.NilpotentMatsuoAlgebra, line) -> LineDecomposition:
    """Split the algebra along ker(ad^N) and ker((ad+1)^N), N = dim."""
    ln = matsuo.line_nilpotent(alg, line)
    ad = matsuo.ad_matrix(alg, ln)
    n = alg.dim
    ident = FieldMatrix.identity(GF2, n)
    ad1 = ad + ident
    basis0 = (ad ** n).kernel()
    basis1_proper = ad1.kernel()
    basis1 = (ad1 ** n).kernel()
    if len(basis0) + len(basis1) != n:
        raise RuntimeError(
            "unexpected eigenvalue: the generalized 0- and 1-eigenspaces do "
            f"not exhaust the algebra for line {tuple(line)!r}"
        )
    if basis1 != basis1_proper:
        raise RuntimeError(
            f"generalized 1-part exceeds the 1-eigenspace for line {tuple(line)!r}"
        )
    eigen0 = len(ad.kernel())
    eigen1 = len(basis1_proper)
    P = FieldMatrix.from_cols(GF2, n, basis0 + basis1)
    return LineDecomposition(
        line=tuple(sorted(line)),
        dim=n,
        basis0=basis0,
        basis1=basis1,
        eigen0_dim=eigen0,
        eigen1_dim=eigen1,
        semisimple=(eigen0 + eigen1 == n),
        coord_matrix=P.inverse(),
    )


@dataclass(frozen=True)
class FusionTable:
    """Minimal observed fusion law on labels {0, 1}; symmetric."""

    cells: dict

    def entry(self, x: int, y: int) -> frozenset:
        return self.cells[(min(x, y), max(x, y))]

    def to_json_dict(self) -> dict:
        return {
            "00": sorted(self.cells[(0, 0)]),
            "01": sorted(self.cells[(0, 1)]),
            "11": sorted(self.cells[(1, 1)]),
        }


@dataclass(frozen=True)
class Witness:
    """A pair of 1-part elements whose product leaks back into the 1-part."""

    u: int
    v: int
    product: int
    bad_component: int


def _ad_rows_for(alg, u):
    rows = [0] * alg.dim
    uu = u
    while uu:
        low = uu & -uu
        for r, ar in enumerate(alg.ad_rows(low.bit_length() - 1)):
            rows[r] ^= ar
        uu ^= low
    return rows


def _apply_rows(rows, v):
    out = 0
    for i, r in enumerate(rows):
        if (r & v).bit_count() & 1:
            out |= 1 << i
    return out


def fusion_table(alg: matsuo.NilpotentMatsuoAlgebra, dec: LineDecomposition,
                 _witness_out: list | None = None) -> FusionTable:
    """Observed fusion law from all basis-pair products of the two parts.

    Optionally records the first (lexicographic) 1-part basis pair whose
    product has a nonzero 1-component.
    """
    parts = (dec.basis0, dec.basis1)
    ad_cache = {u: _ad_rows_for(alg, u) for u in dec.basis0 + dec.basis1}
    cells = {}
    for x, y in ((0, 0), (0, 1), (1, 1)):
        labels = set()
        for i, u in enumerate(parts[x]):
            rows = ad_cache[u]
            js = range(i, len(parts[y])) if x == y else range(len(parts[y]))
            for j in js:
                v = parts[y][j]
                p = _apply_rows(rows, v)
                if not p:
                    continue
                f0, f1 = dec.component_flags(p)
                if f0:
                    labels.add(0)
                if f1:
                    labels.add(1)
                if (
                    x == 1 and f1
                    and _witness_out is not None and not _witness_out
                ):
                    _, bad = dec.split(p)
                    _witness_out.append(Witness(u, v, p, bad))
        cells[(x, y)] = frozenset(labels)
    return FusionTable(cells)


def is_z2_graded(table: FusionTable) -> bool:
    return (
        table.entry(0, 0) <= {0}
        and table.entry(0, 1) <= {1}
        and table.entry(1, 1) <= {0}
    )


@dataclass(frozen=True)
class LineVerdict:
    line: tuple[int, int, int]
    decomposition: LineDecomposition
    fusion: FusionTable
    z2_graded: bool
    witness: Witness | None

    def to_json_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = {
                "u": vec_support(self.witness.u),
                "v": vec_support(self.witness.v),
                "bad_component": vec_support(self.witness.bad_component),
            }
        d = self.decomposition
        return {
            "line": list(self.line),
            "gen_dims": list(d.gen_dims()),
            "eigen_dims": [d.eigen0_dim, d.eigen1_dim],
            "semisimple": d.semisimple,
            "fusion": self.fusion.to_json_dict(),
            "z2_graded": self.z2_graded,
            "witness": w,
        }


@dataclass(frozen=True)
class GradingVerdict:
    """Per-line grading verdicts with a good-line census.

    A line is 'good' when every plane through it is affine (no quadrilateral
    contains it).  graded is the AND over all lines.
    """

    verdicts: tuple[LineVerdict, ...]
    graded: bool
    good_lines: tuple[tuple[int, int, int], ...]

    def verdict_for(self, line) -> LineVerdict:
        t = tuple(sorted(line))
        for v in self.verdicts:
            if v.line == t:
                return v
        raise KeyError(t)

    def to_json_dict(self) -> dict:
        return {
            "z2_graded": self.graded,
            "good_lines": [list(t) for t in self.good_lines],
            "lines": [v.to_json_dict() for v in self.verdicts],
        }


def line_verdict(alg: matsuo.NilpotentMatsuoAlgebra, line) -> LineVerdict:
    dec = decompose_line(alg, line)
    wit: list = []
    table = fusion_table(alg, dec, _witness_out=wit)
    graded = is_z2_graded(table)
    return LineVerdict(
        line=tuple(sorted(line)),
        decomposition=dec,
        fusion=table,
        z2_graded=graded,
        witness=None if graded else (wit[0] if wit else None),
    )


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MATSUO2_THREADS", "1")))
    except ValueError:
        return 1


def classify_space(alg: matsuo.NilpotentMatsuoAlgebra,
                   threads: int | None = None) -> GradingVerdict:
    """Verdicts for every line, in line order regardless of thread count."""
    lines = alg.space.lines
    if threads is None:
        threads = default_threads()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            verdicts = tuple(ex.map(lambda t: line_verdict(alg, t), lines))
    else:
        verdicts = tuple(line_verdict(alg, t) for t in lines)
    good = tuple(
        t for t in lines if not fischer.cqs_through_line(alg.space, t)
    )
    return GradingVerdict(
        verdicts=verdicts,
        graded=all(v.z2_graded for v in verdicts),
        good_lines=good,
    )


# -- structured eigenbasis for symplectic spaces --------------------------------


@dataclass(frozen=True)
class StructuredBasis:
    """Spanning data for the two parts in a symplectic-type space.

    The 0-part is spanned by the line's points, one indicator sum per
    quadrilateral through the line, and the points seeing none of the line;
    the 1-part by the products (line nilpotent) * z over z seeing two points.
    """

    line_points: tuple[int, ...]
    quad_sums: tuple[tuple[frozenset, int], ...]
    p0_points: tuple[int, ...]
    one_part: tuple[tuple[int, int], ...]  # (point z, line*z)

    def zero_vectors(self) -> list[int]:
        return (
            [1 << p for p in self.line_points]
            + [m for _, m in self.quad_sums]
            + [1 << w for w in self.p0_points]
        )

    def one_vectors(self) -> list[int]:
        return [m for _, m in self.one_part]


def symplectic_structured_basis(alg: matsuo.NilpotentMatsuoAlgebra,
                                line) -> StructuredBasis:
    """The structured spanning sets, verified against decompose_line."""
    space = alg.space
    if alg.reduced:
        raise ValueError("structured basis is defined on the full algebra")
    if not fischer.is_symplectic_type(space):
        raise ValueError("structured basis needs a space of symplectic type")
    t = tuple(sorted(line))
    p0, p2, p3 = fischer.points_p0_p2(space, t)
    assert not p3, "symplectic spaces have no point seeing all of a line"
    quads = fischer.cqs_through_line(space, t)
    ln = matsuo.line_nilpotent(alg, t)
    sb = StructuredBasis(
        line_points=t,
        quad_sums=tuple(
            (pts, sum(1 << p for p in pts)) for pts in quads
        ),
        p0_points=p0,
        one_part=tuple(
            (z, matsuo.multiply(alg, ln, 1 << z)) for z in p2
        ),
    )
    dec = decompose_line(alg, t)
    if not span_equal(GF2, sb.zero_vectors(), dec.basis0, alg.dim):
        raise RuntimeError("structured 0-part does not span the 0-eigenspace")
    if not span_equal(GF2, sb.one_vectors(), dec.basis1, alg.dim):
        raise RuntimeError("structured 1-part does not span the 1-eigenspace")
    if 3 + len(quads) + len(p0) != dec.eigen0_dim:
        raise RuntimeError("structured 0-part is not a direct sum")
    return sb


# -- the two-quadrilaterals dichotomy --------------------------------------------


@dataclass(frozen=True)
class CqPairCase:
    """Outcome for two quadrilaterals sharing a line.

    Case 'a': the two off-triples match up by collinearity and their wedges
    meet in a single point w seeing none of the line.  Case 'b': the wedges
    produce three points d, e, f forming a third quadrilateral through the
    line.
    """

    case: str  # "a" or "b"
    w: int | None = None
    def_points: tuple[int, int, int] | None = None
    third_quad: frozenset | None = None


def _off_labeling(space, t, quad):
    """Off-points of a quadrilateral through t, ordered opposite a, b, c."""
    off = sorted(set(quad) - set(t))
    out = []
    for anchor in t:
        opp = [u for u in off if not space.are_collinear(anchor, u)]
        if len(opp) != 1:
            raise fischer.InvalidSpaceError(
                f"{quad!r} is not a quadrilateral through {t!r}"
            )
        out.append(opp[0])
    if len(set(out)) != 3:
        raise fischer.InvalidSpaceError(
            f"{quad!r} is not a quadrilateral through {t!r}"
        )
    return out


def cq_pair_case(space: fischer.FischerSpace, line, quad1, quad2) -> CqPairCase:
    """Classify two distinct quadrilaterals through a common line."""
    t = tuple(sorted(line))
    q1, q2 = frozenset(quad1), frozenset(quad2)
    if q1 == q2:
        raise ValueError("the two quadrilaterals must be distinct")
    for q in (q1, q2):
        if not (len(q) == 6 and q.issuperset(t)):
            raise ValueError(f"{sorted(q)!r} is not a 6-point set through {t!r}")
    a, b, c = t
    x, y, z = _off_labeling(space, t, q1)
    p, q, r = _off_labeling(space, t, q2)
    rel = tuple(
        tuple(space.are_collinear(u, v) for v in (x, y, z)) for u in (p, q, r)
    )
    ident = ((True, False, False), (False, True, False), (False, False, True))
    compl = ((False, True, True), (True, False, True), (True, True, False))
    if rel == ident:
        w = fischer.wedge(space, p, x)
        if w != fischer.wedge(space, q, y) or w != fischer.wedge(space, r, z):
            raise fischer.InvalidSpaceError(
                f"matched wedges disagree for quadrilaterals through {t!r}"
            )
        if any(space.are_collinear(w, u) for u in t):
            raise fischer.InvalidSpaceError(
                f"common wedge point {w} is collinear with the shared line {t!r}"
            )
        return CqPairCase(case="a", w=w)
    if rel == compl:
        d = fischer.wedge(space, r, y)
        e = fischer.wedge(space, r, x)
        f = fischer.wedge(space, q, x)
        if (
            d != fischer.wedge(space, q, z)
            or e != fischer.wedge(space, p, z)
            or f != fischer.wedge(space, p, y)
        ):
            raise fischer.InvalidSpaceError(
                f"wedge identities fail for quadrilaterals through {t!r}"
            )
        for triple in ((a, e, f), (b, d, f), (c, d, e)):
            if not space.is_line(triple):
                raise fischer.InvalidSpaceError(
                    f"expected line {tuple(sorted(triple))!r} is missing"
                )
        third = frozenset((a, b, c, d, e, f))
        inside = fischer._lines_inside(space, third)
        on_count = {u: sum(1 for q3 in inside if u in q3) for u in third}
        if len(third) != 6 or len(inside) != 4 or set(on_count.values()) != {2}:
            raise fischer.InvalidSpaceError(
                f"{sorted(third)!r} is not a third quadrilateral through {t!r}"
            )
        return CqPairCase(case="b", def_points=(d, e, f), third_quad=third)
    raise fischer.InvalidSpaceError(
        f"quadrilaterals through {t!r} match neither collinearity pattern"
    )
