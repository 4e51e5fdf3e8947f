"""Miyamoto maps over GF(2^k) and the groups they generate for the quadrilateral.

The quadrilateral algebra is the one case here whose fusion law has an empty
1*1 cell, so each line decomposition upgrades to an integer grading and every
unit lambda gives an automorphism scaling the 1-part by lambda.  In the frozen
basis

    B  = (a, b, l, lx, ly, s)      for the 6-dimensional algebra,
    B' = (a, b, l, lx, ly)         for its quotient by <s>,

these maps are exactly the block matrices

    S(alpha, beta, lambda) = [ I3            0            ]
                             [ M(alpha,beta) diag(l,l,1)  ]

with M(alpha,beta) = [[alpha,0,beta],[0,beta,alpha],[0,0,0]], which compose by

    S(a,b,l) S(c,d,m) = S(a+lc, b+ld, lm).

The automorphism groups over GF(2) are enumerated exhaustively, pruned only
by subspace constraints (stabilizing A*A, A*(A*A) and the annihilator) that
are themselves recomputed from the structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import decomp, fischer, matsuo
from .gf import Field, FieldMatrix, lift_matrix, lift_vec

GF2 = matsuo.GF2

# the four lines of the quadrilateral in the order l1={a,b,c}, l2={b,x,z},
# l3={a,y,z}, l4={c,x,y}, matching the catalog point order (a,b,c,x,y,z)
CQ_LINE_ORDER = ((0, 1, 2), (1, 3, 5), (0, 4, 5), (2, 3, 4))


class MiyamotoCheckError(RuntimeError):
    """A structural check on a Miyamoto group computation failed."""


def _require_cq(alg: matsuo.NilpotentMatsuoAlgebra) -> None:
    if alg.space.n_points != 6 or alg.space.lines != ((0, 1, 2), (0, 4, 5), (1, 3, 5), (2, 3, 4)):
        raise ValueError(
            "this operation is specific to the complete quadrilateral "
            "(catalog space 'cq')"
        )


# -- Miyamoto maps -----------------------------------------------------------------


@dataclass(frozen=True)
class MiyamotoMap:
    """An automorphism acting as identity on the 0-part, lambda on the 1-part."""

    line: tuple[int, int, int]
    lam: int
    field: Field
    matrix: FieldMatrix  # in the algebra's point basis


def miyamoto_map(alg: matsuo.NilpotentMatsuoAlgebra, field: Field,
                 dec: decomp.LineDecomposition, lam: int) -> MiyamotoMap:
    """Build the map for one line and verify it is an algebra automorphism."""
    if lam == 0:
        raise ValueError("lambda must be a unit")
    n = alg.dim
    P = FieldMatrix.from_cols(GF2, n, dec.basis0 + dec.basis1)
    d0 = len(dec.basis0)
    k = field.k
    diag_rows = [
        (1 if i < d0 else lam) << (i * k) for i in range(n)
    ]
    D = FieldMatrix(field, n, n, diag_rows)
    M = lift_matrix(field, P) * D * lift_matrix(field, dec.coord_matrix)
    for i in range(n):
        ci = M.col(i)
        for j in range(i, n):
            lhs = M.matvec(lift_vec(field, alg.table[i][j], n))
            rhs = matsuo.multiply_ext(alg, field, ci, M.col(j))
            if lhs != rhs:
                raise ValueError(
                    f"map for line {dec.line} with lambda={lam} is not an "
                    "automorphism; the line decomposition is not graded"
                )
    return MiyamotoMap(line=dec.line, lam=lam, field=field, matrix=M)


# -- the frozen quadrilateral basis -------------------------------------------------


def frozen_basis_columns(alg: matsuo.NilpotentMatsuoAlgebra) -> tuple[int, ...]:
    """(a, b, l, lx, ly[, s]) as point-basis masks; 5 columns when reduced."""
    _require_cq(alg)
    ell = matsuo.line_nilpotent(alg, (0, 1, 2))
    cols = [
        1 << 0,
        1 << 1,
        ell,
        matsuo.multiply(alg, ell, 1 << 3),
        matsuo.multiply(alg, ell, 1 << 4),
    ]
    if not alg.reduced:
        cols.append((1 << alg.dim) - 1)
    return tuple(cols)


def frozen_basis_change(alg: matsuo.NilpotentMatsuoAlgebra) -> tuple[FieldMatrix, FieldMatrix]:
    """(C, C^-1) with the frozen basis as the columns of C, over GF(2)."""
    C = FieldMatrix.from_cols(GF2, alg.dim, frozen_basis_columns(alg))
    return C, C.inverse()


def frozen_basis_structure(alg: matsuo.NilpotentMatsuoAlgebra) -> tuple[tuple[int, ...], ...]:
    """Structure constants rewritten in the frozen basis (masks per pair)."""
    cols = frozen_basis_columns(alg)
    _, Cinv = frozen_basis_change(alg)
    n = alg.dim
    return tuple(
        tuple(Cinv.matvec(matsuo.multiply(alg, cols[i], cols[j])) for j in range(n))
        for i in range(n)
    )


def cq_miyamoto_matrix(alg: matsuo.NilpotentMatsuoAlgebra, field: Field,
                      line, lam: int) -> FieldMatrix:
    """Miyamoto map of the quadrilateral, written in the frozen basis."""
    _require_cq(alg)
    dec = decomp.decompose_line(alg, line)
    m = miyamoto_map(alg, field, dec, lam).matrix
    C, Cinv = frozen_basis_change(alg)
    return lift_matrix(field, Cinv) * m * lift_matrix(field, C)


# -- S-matrices ---------------------------------------------------------------------


def s_matrix(field: Field, alpha: int, beta: int, lam: int,
             reduced: bool = False) -> FieldMatrix:
    """The block matrix S(alpha, beta, lambda) in the frozen basis."""
    if lam == 0:
        raise ValueError("lambda must be a unit")
    n = 5 if reduced else 6
    rows = [[0] * n for _ in range(n)]
    for i in range(3):
        rows[i][i] = 1
    rows[3][0], rows[3][2] = alpha, beta
    rows[4][1], rows[4][2] = beta, alpha
    rows[3][3] = lam
    rows[4][4] = lam
    if not reduced:
        rows[5][5] = 1
    return FieldMatrix.from_rows(field, rows)


def s_compose(field: Field, p1, p2) -> tuple[int, int, int]:
    """Parameter composition law of the S-matrices."""
    (a, b, l), (c, d, m) = p1, p2
    return (a ^ field.mul(l, c), b ^ field.mul(l, d), field.mul(l, m))


def parse_s_matrix(m: FieldMatrix) -> tuple[int, int, int] | None:
    """Recover (alpha, beta, lambda) if the matrix has the S block shape."""
    n = m.nrows
    if n not in (5, 6) or m.ncols != n:
        return None
    for i in range(3):
        for j in range(n):
            if m.entry(i, j) != (1 if i == j else 0):
                return None
    alpha, beta, lam = m.entry(3, 0), m.entry(3, 2), m.entry(3, 3)
    if lam == 0:
        return None
    row3 = (alpha, 0, beta, lam, 0) + ((0,) if n == 6 else ())
    row4 = (0, beta, alpha, 0, lam) + ((0,) if n == 6 else ())
    if tuple(m.entry(3, j) for j in range(n)) != row3:
        return None
    if tuple(m.entry(4, j) for j in range(n)) != row4:
        return None
    if n == 6 and tuple(m.entry(5, j) for j in range(n)) != (0, 0, 0, 0, 0, 1):
        return None
    return (alpha, beta, lam)


# -- matrix group closure --------------------------------------------------------------


@dataclass(frozen=True)
class MatrixGroup:
    field: Field
    degree: int
    generators: tuple[FieldMatrix, ...]
    elements: tuple[FieldMatrix, ...]

    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, m: FieldMatrix) -> bool:
        return m in set(self.elements)


def group_closure(generators, cap: int = 1_000_000) -> MatrixGroup:
    """BFS closure under multiplication; order is frozen by generator order."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    field = gens[0].field
    degree = gens[0].nrows
    for g in gens:
        g.inverse()  # raises NoSolution for a singular generator
    uniq = []
    seen = set()
    for g in sorted(gens, key=lambda m: m.rows):
        if g.rows not in seen:
            seen.add(g.rows)
            uniq.append(g)
    elements = list(uniq)
    queue = list(uniq)
    while queue:
        x = queue.pop(0)
        for g in uniq:
            y = x * g
            if y.rows not in seen:
                seen.add(y.rows)
                elements.append(y)
                queue.append(y)
                if len(elements) > cap:
                    raise MiyamotoCheckError(f"group closure exceeds cap {cap}")
    return MatrixGroup(field, degree, tuple(uniq), tuple(elements))


# -- quadrilateral Miyamoto group at finite-field points -------------------------------


@dataclass(frozen=True)
class CqMiyamotoReport:
    field_k: int
    group_order: int
    expected_order: int
    all_s_matrices: bool
    params_unique: bool
    restriction_injective: bool
    restriction_onto_reduced: bool
    fixes_s: bool
    reduced_group_order: int


def _drop_last(m: FieldMatrix) -> FieldMatrix:
    k = m.field.k
    keep = (1 << ((m.ncols - 1) * k)) - 1
    return FieldMatrix(m.field, m.nrows - 1, m.ncols - 1,
                       tuple(r & keep for r in m.rows[:-1]))


def cq_miyamoto_group(field: Field, reduced: bool = False,
                      cap: int = 1_000_000) -> MatrixGroup:
    """Closure of all Miyamoto maps of the quadrilateral over the given field."""
    alg = matsuo.build(fischer.catalog("cq"))
    if reduced:
        alg = matsuo.reduce(alg)
    gens = [
        cq_miyamoto_matrix(alg, field, line, lam)
        for line in CQ_LINE_ORDER
        for lam in field.nonzero()
    ]
    return group_closure(gens, cap=cap)


def verify_cq_miyamoto(k: int) -> CqMiyamotoReport:
    """Check the structure of the quadrilateral Miyamoto group over GF(2^k).

    Verifies that every closure element is a uniquely parameterized S-matrix,
    that the order is 2^(2k) (2^k - 1), that restriction to the quotient
    algebra is injective and lands onto its Miyamoto group, and that every
    element fixes the annihilator generator s.  Raises MiyamotoCheckError if
    any check fails.
    """
    if k not in (2, 3, 4):
        raise ValueError("supported field degrees are k in {2, 3, 4}")
    field = Field(k)
    expected = (1 << (2 * k)) * ((1 << k) - 1)
    G = group_closure(
        [
            cq_miyamoto_matrix(matsuo.build(fischer.catalog("cq")), field, line, lam)
            for line in CQ_LINE_ORDER
            for lam in field.nonzero()
        ],
        cap=4 * expected,
    )
    params = [parse_s_matrix(m) for m in G.elements]
    all_s = all(p is not None for p in params)
    unique = len(set(params)) == len(params)
    s_vec = 1 << (5 * field.k)
    fixes_s = all(m.col(5) == s_vec for m in G.elements)

    Gr = cq_miyamoto_group(field, reduced=True, cap=4 * expected)
    restricted = [_drop_last(m) for m in G.elements]
    restriction_injective = len({m.rows for m in restricted}) == len(G.elements)
    onto = {m.rows for m in restricted} == {m.rows for m in Gr.elements}

    report = CqMiyamotoReport(
        field_k=k,
        group_order=G.size(),
        expected_order=expected,
        all_s_matrices=all_s,
        params_unique=unique,
        restriction_injective=restriction_injective,
        restriction_onto_reduced=onto,
        fixes_s=fixes_s,
        reduced_group_order=Gr.size(),
    )
    ok = (
        all_s and unique and fixes_s and restriction_injective and onto
        and G.size() == expected and Gr.size() == expected
    )
    if not ok:
        raise MiyamotoCheckError(f"Miyamoto group checks failed: {report!r}")
    return report


# -- automorphism groups over GF(2) --------------------------------------------------


def _mask_mult(structure):
    """Bilinear multiplication of basis masks from a structure-constant table."""
    n = len(structure)

    def mult(u: int, v: int) -> int:
        acc = 0
        uu = u
        while uu:
            lu = uu & -uu
            ti = structure[lu.bit_length() - 1]
            vv = v
            while vv:
                lv = vv & -vv
                acc ^= ti[lv.bit_length() - 1]
                vv ^= lv
            uu ^= lu
        return acc

    return mult


def _span(vectors, n) -> list[int]:
    """All elements of the GF(2) span, ascending."""
    vecs = [v for v in vectors if v]
    if vecs:
        M = FieldMatrix(GF2, len(vecs), n, vecs)
        basis = [r for r in M.rref()[0].rows if r]
    else:
        basis = []
    out = [0]
    for b in basis:
        out.extend(x ^ b for x in list(out))
    return sorted(out)


def _apply_cols(cols, mask: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        out ^= cols[low.bit_length() - 1]
        m ^= low
    return out


def _is_invertible(cols, n) -> bool:
    return FieldMatrix.from_cols(GF2, n, cols).rank() == n


def _check_partial(mult, structure, cols, upto: int) -> bool:
    """Verify hom equations whose operands and targets use basis 0..upto."""
    for i in range(upto + 1):
        for j in range(i, upto + 1):
            target = structure[i][j]
            if target >> (upto + 1):
                continue  # target involves a basis vector not chosen yet
            if max(i, j) < upto and not (target >> upto):
                continue  # already checked at an earlier step
            if mult(cols[i], cols[j]) != _apply_cols(cols, target):
                return False
    return True


def invariant_subspaces(structure, n):
    """Spans of A*A and A*(A*A), recomputed from the structure constants."""
    mult = _mask_mult(structure)
    aa_gen = [structure[i][j] for i in range(n) for j in range(n)]
    aa = _span(aa_gen, n)
    aaa_gen = [mult(1 << i, w) for i in range(n) for w in aa]
    return aa, _span(aaa_gen, n)


def _annihilator_span(structure, n):
    mult = _mask_mult(structure)
    ann = [v for v in range(1 << n) if all(mult(v, 1 << i) == 0 for i in range(n))]
    return ann  # includes 0; already ascending


def aut_enumerate_reduced() -> MatrixGroup:
    """All automorphisms of the 5-dimensional quotient algebra over GF(2).

    Exhausts candidate images column by column in the frozen basis, pruned by
    the requirement that A*A and A*(A*A) are stabilized; both subspaces are
    recomputed from the structure constants.
    """
    alg = matsuo.reduce(matsuo.build(fischer.catalog("cq")))
    structure = frozen_basis_structure(alg)
    n = alg.dim
    mult = _mask_mult(structure)
    aa, aaa = invariant_subspaces(structure, n)
    full = list(range(1, 1 << n))
    domains = [full, full, [v for v in aa if v], [v for v in aaa if v],
               [v for v in aaa if v]]
    found = []

    def extend(cols):
        m = len(cols) - 1
        if not _check_partial(mult, structure, cols, m):
            return
        if len(cols) == n:
            if _is_invertible(cols, n):
                found.append(FieldMatrix.from_cols(GF2, n, cols))
            return
        for c in domains[len(cols)]:
            extend(cols + [c])

    for c0 in domains[0]:
        extend([c0])
    found.sort(key=lambda mat: mat.rows)
    return MatrixGroup(GF2, n, (), tuple(found))


def aut_reduced_unconstrained() -> tuple[FieldMatrix, ...]:
    """Cross-check: sweep all 2^25 candidate matrices with no subspace pruning.

    Equivalent to testing every 5x5 matrix over GF(2); inner loops abort a
    candidate as soon as one homomorphism equation fails, which does not
    change the surviving set.
    """
    alg = matsuo.reduce(matsuo.build(fischer.catalog("cq")))
    structure = frozen_basis_structure(alg)
    n = alg.dim
    mult = _mask_mult(structure)
    full = list(range(1 << n))
    found = []

    def extend(cols):
        if not _check_partial(mult, structure, cols, len(cols) - 1):
            return
        if len(cols) == n:
            if _is_invertible(cols, n):
                found.append(FieldMatrix.from_cols(GF2, n, cols))
            return
        for c in full:
            extend(cols + [c])

    for c0 in full:
        extend([c0])
    found.sort(key=lambda mat: mat.rows)
    return tuple(found)


@dataclass(frozen=True)
class AutFullReport:
    order: int
    reduced_order: int
    block_shape_order: int
    sets_agree: bool
    quadratic_identity: bool
    nu_all_one: bool


def aut_enumerate_full() -> MatrixGroup:
    """All automorphisms of the 6-dimensional algebra over GF(2).

    Candidates stabilize A*A, A*(A*A) and the annihilator, all recomputed
    from the structure constants; every survivor satisfies the full set of
    homomorphism equations.
    """
    alg = matsuo.build(fischer.catalog("cq"))
    structure = frozen_basis_structure(alg)
    n = alg.dim
    mult = _mask_mult(structure)
    aa, aaa = invariant_subspaces(structure, n)
    ann = [v for v in _annihilator_span(structure, n) if v]
    full = list(range(1, 1 << n))
    domains = [full, full, [v for v in aa if v], [v for v in aaa if v],
               [v for v in aaa if v], ann]
    found = []

    def extend(cols):
        if not _check_partial(mult, structure, cols, len(cols) - 1):
            return
        if len(cols) == n:
            if _is_invertible(cols, n):
                found.append(FieldMatrix.from_cols(GF2, n, cols))
            return
        for c in domains[len(cols)]:
            extend(cols + [c])

    for c0 in domains[0]:
        extend([c0])
    found.sort(key=lambda mat: mat.rows)
    return MatrixGroup(GF2, n, (), tuple(found))


def _quadratic_identity_holds(m: FieldMatrix) -> bool:
    """Upper-left 2x2 block equals (det M2)^-1 times entrywise squares of M2,
    where M2 is the (lx, ly) action block."""
    f = m.field
    d4, e4 = m.entry(3, 3), m.entry(3, 4)
    d5, e5 = m.entry(4, 3), m.entry(4, 4)
    det = f.mul(d4, e5) ^ f.mul(d5, e4)
    if det == 0:
        return False
    r = f.inv(det)
    expect = (
        (f.mul(r, f.mul(d4, d4)), f.mul(r, f.mul(e4, e4))),
        (f.mul(r, f.mul(d5, d5)), f.mul(r, f.mul(e5, e5))),
    )
    actual = ((m.entry(0, 0), m.entry(0, 1)), (m.entry(1, 0), m.entry(1, 1)))
    return actual == expect


def aut_count_full() -> AutFullReport:
    """Count Aut of the full algebra and cross-check the block structure.

    The constrained enumeration is compared against candidates built from
    automorphisms of the quotient extended by the (kappa, lambda, nu) bottom
    row; the two routes must agree exactly.
    """
    full_group = aut_enumerate_full()
    reduced_group = aut_enumerate_reduced()
    alg = matsuo.build(fischer.catalog("cq"))
    structure = frozen_basis_structure(alg)
    n = alg.dim
    mult = _mask_mult(structure)

    block_built = []
    for theta in reduced_group.elements:
        for kappa in (0, 1):
            for lam in (0, 1):
                rows = list(theta.rows) + [0]
                # bottom row (kappa, lambda, 0, 0, 0, nu) with nu = 1
                rows[5] = kappa | (lam << 1) | (1 << 5)
                cand = FieldMatrix(GF2, n, n, rows)
                cand_cols = [cand.col(j) for j in range(n)]
                ok = True
                for i in range(n):
                    for j in range(i, n):
                        if mult(cand_cols[i], cand_cols[j]) != _apply_cols(
                            cand_cols, structure[i][j]
                        ):
                            ok = False
                            break
                    if not ok:
                        break
                if ok and _is_invertible(cand_cols, n):
                    block_built.append(FieldMatrix(GF2, n, n, rows))
    block_built.sort(key=lambda m: m.rows)

    agree = tuple(block_built) == full_group.elements
    quad = all(_quadratic_identity_holds(m) for m in full_group.elements)
    nu_one = all(m.entry(5, 5) == 1 for m in full_group.elements)
    return AutFullReport(
        order=full_group.size(),
        reduced_order=reduced_group.size(),
        block_shape_order=len(block_built),
        sets_agree=agree,
        quadratic_identity=quad,
        nu_all_one=nu_one,
    )
