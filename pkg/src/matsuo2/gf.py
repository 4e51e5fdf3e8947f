"""Exact arithmetic in GF(2^k) for k <= 8 and dense exact linear algebra over it.

Field elements are ints in [0, 2^k) whose binary digits are the coefficients
of a polynomial over GF(2); arithmetic is done modulo a fixed irreducible
polynomial per degree:

    k=1 : x                    -> 0b10        = 2
    k=2 : x^2 + x + 1          -> 0b111       = 7
    k=3 : x^3 + x + 1          -> 0b1011      = 11
    k=4 : x^4 + x + 1          -> 0b10011     = 19
    k=5 : x^5 + x^2 + 1        -> 0b100101    = 37
    k=6 : x^6 + x + 1          -> 0b1000011   = 67
    k=7 : x^7 + x^3 + 1        -> 0b10001001  = 137
    k=8 : x^8 + x^4 + x^3 + x + 1 -> 0b100011011 = 283

The choice is frozen so that all reports are bit-exact and reproducible.

Vectors and matrix rows pack their entries k bits apiece into a single int.
Addition of packed rows is therefore always XOR (characteristic 2), and over
GF(2) a vector is an ordinary bitmask.
"""

from __future__ import annotations

IRREDUCIBLE = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011011,
}

_GF4_NAMES = ("0", "1", "w", "w+1")


class NoSolution(ValueError):
    """Raised when a linear system is inconsistent or a matrix is singular."""


def _mul_raw(a: int, b: int, k: int, modulus: int) -> int:
    """Carry-less multiply mod the irreducible polynomial, without tables."""
    p = 0
    top = 1 << k
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        if a & top:
            a ^= modulus
        b >>= 1
    return p


class Field:
    """The finite field GF(2^k), with log/antilog multiplication tables.

    Two Field instances with the same k are interchangeable.
    """

    __slots__ = ("k", "modulus", "order", "mask", "generator", "_exp", "_log")

    def __init__(self, k: int) -> None:
        if k not in IRREDUCIBLE:
            raise ValueError(f"unsupported extension degree k={k}; must be in 1..8")
        self.k = k
        self.modulus = IRREDUCIBLE[k]
        self.order = 1 << k
        self.mask = self.order - 1
        self.generator = self._find_generator()
        # log/antilog tables; exp is doubled so mul never needs a reduction.
        n = self.order - 1
        self._exp = [1] * (2 * max(n, 1))
        self._log = [0] * self.order
        x = 1
        for i in range(n):
            self._exp[i] = x
            self._exp[i + n] = x
            self._log[x] = i
            x = _mul_raw(x, self.generator, k, self.modulus)
        if x != 1:
            raise AssertionError("generator does not have full multiplicative order")

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        for g in range(2, self.order):
            x = g
            order = 1
            while x != 1:
                x = _mul_raw(x, g, self.k, self.modulus)
                order += 1
            if order == n:
                return g
        raise AssertionError("no multiplicative generator found")

    # -- element arithmetic (ints in [0, 2^k)) --

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^k)")
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def el(self, bits: int) -> "Fel":
        return Fel(self, bits)

    def pretty(self, bits: int) -> str:
        """Pretty name of an element; GF(4) uses {0, 1, w, w+1}."""
        if self.k == 2:
            return _GF4_NAMES[bits]
        return str(bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.k == self.k

    def __hash__(self) -> int:
        return hash(("Field", self.k))

    def __repr__(self) -> str:
        return f"GF({self.order})"


class Fel:
    """A field element carrying its field; serializes as a decimal bit pattern."""

    __slots__ = ("field", "bits")

    def __init__(self, field: Field, bits: int) -> None:
        if not 0 <= bits < field.order:
            raise ValueError(f"bit pattern {bits} out of range for {field!r}")
        self.field = field
        self.bits = bits

    def _coerce(self, other: "Fel") -> int:
        if not isinstance(other, Fel):
            raise TypeError(f"expected a field element, got {other!r}")
        if other.field.k != self.field.k:
            raise ValueError(f"mixed fields: {self.field!r} and {other.field!r}")
        return other.bits

    def __add__(self, other: "Fel") -> "Fel":
        return Fel(self.field, self.bits ^ self._coerce(other))

    __sub__ = __add__

    def __mul__(self, other: "Fel") -> "Fel":
        return Fel(self.field, self.field.mul(self.bits, self._coerce(other)))

    def inv(self) -> "Fel":
        return Fel(self.field, self.field.inv(self.bits))

    def __pow__(self, n: int) -> "Fel":
        return Fel(self.field, self.field.power(self.bits, n))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Fel)
            and other.field.k == self.field.k
            and other.bits == self.bits
        )

    def __hash__(self) -> int:
        return hash((self.field.k, self.bits))

    def __repr__(self) -> str:
        return self.field.pretty(self.bits)


def fel_mul(a: Fel, b: Fel) -> Fel:
    return a * b


def fel_inv(a: Fel) -> Fel:
    return a.inv()


# -- packed vectors ----------------------------------------------------------
#
# A vector of length n over GF(2^k) is an int whose entry j occupies bits
# [j*k, (j+1)*k).  Over GF(2) this is the usual bitmask, and matsuo/decomp
# use such masks directly as algebra elements.


def vec_entry(field: Field, v: int, j: int) -> int:
    return (v >> (j * field.k)) & field.mask


def vec_from_list(field: Field, coeffs) -> int:
    v = 0
    for j, c in enumerate(coeffs):
        if not 0 <= c < field.order:
            raise ValueError(f"coefficient {c} out of range for {field!r}")
        v |= c << (j * field.k)
    return v


def vec_to_list(field: Field, v: int, n: int) -> list[int]:
    return [vec_entry(field, v, j) for j in range(n)]


def vec_scale(field: Field, v: int, c: int, n: int) -> int:
    if c == 0:
        return 0
    if c == 1:
        return v
    out = 0
    k = field.k
    for j in range(n):
        e = (v >> (j * k)) & field.mask
        if e:
            out |= field.mul(e, c) << (j * k)
    return out


def vec_support(v: int) -> list[int]:
    """Indices of the set bits of a GF(2) mask, ascending."""
    out = []
    j = 0
    while v:
        if v & 1:
            out.append(j)
        v >>= 1
        j += 1
    return out


def mask_from_support(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def lift_vec(field: Field, mask: int, n: int) -> int:
    """Reinterpret a GF(2) mask of length n as a 0/1 vector over GF(2^k)."""
    if field.k == 1:
        return mask
    v = 0
    for j in range(n):
        if (mask >> j) & 1:
            v |= 1 << (j * field.k)
    return v


def proj_vec(field: Field, v: int, n: int) -> int:
    """Inverse of lift_vec for 0/1 vectors; entries must be 0 or 1."""
    if field.k == 1:
        return v
    m = 0
    for j in range(n):
        e = vec_entry(field, v, j)
        if e == 1:
            m |= 1 << j
        elif e:
            raise ValueError("vector has entries outside GF(2)")
    return m


# -- matrices ----------------------------------------------------------------


class FieldMatrix:
    """Dense matrix over GF(2^k); immutable, rows stored as packed ints."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows) -> None:
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(rows)
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    # -- constructors --

    @classmethod
    def from_rows(cls, field: Field, entries) -> "FieldMatrix":
        entries = [list(r) for r in entries]
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged rows")
        return cls(field, nrows, ncols, (vec_from_list(field, r) for r in entries))

    @classmethod
    def from_cols(cls, field: Field, nrows: int, cols) -> "FieldMatrix":
        cols = list(cols)
        k = field.k
        rows = []
        for i in range(nrows):
            r = 0
            for j, c in enumerate(cols):
                r |= vec_entry(field, c, i) << (j * k)
            rows.append(r)
        return cls(field, nrows, len(cols), rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "FieldMatrix":
        k = field.k
        return cls(field, n, n, (1 << (i * k) for i in range(n)))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "FieldMatrix":
        return cls(field, nrows, ncols, (0,) * nrows)

    # -- access --

    def entry(self, i: int, j: int) -> int:
        return vec_entry(self.field, self.rows[i], j)

    def row_list(self, i: int) -> list[int]:
        return vec_to_list(self.field, self.rows[i], self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [self.row_list(i) for i in range(self.nrows)]

    def col(self, j: int) -> int:
        """Column j as a packed vector of length nrows."""
        k = self.field.k
        v = 0
        for i in range(self.nrows):
            v |= self.entry(i, j) << (i * k)
        return v

    # -- arithmetic --

    def _check_same(self, other: "FieldMatrix") -> None:
        if not isinstance(other, FieldMatrix):
            raise TypeError("expected a FieldMatrix")
        if other.field.k != self.field.k:
            raise ValueError("mixed fields")

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_same(other)
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise ValueError("dimension mismatch in matrix addition")
        return FieldMatrix(
            self.field, self.nrows, self.ncols,
            (a ^ b for a, b in zip(self.rows, other.rows)),
        )

    def __mul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_same(other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        if self.field.k == 1:
            rows = []
            for r in self.rows:
                acc = 0
                t = r
                i = 0
                while t:
                    if t & 1:
                        acc ^= other.rows[i]
                    t >>= 1
                    i += 1
                rows.append(acc)
            return FieldMatrix(self.field, self.nrows, other.ncols, rows)
        f = self.field
        k = f.k
        rows = []
        for i in range(self.nrows):
            acc = 0
            for t in range(self.ncols):
                a = self.entry(i, t)
                if a:
                    acc ^= vec_scale(f, other.rows[t], a, other.ncols)
            rows.append(acc)
        return FieldMatrix(f, self.nrows, other.ncols, rows)

    def matvec(self, v: int) -> int:
        """Apply to a packed column vector of length ncols."""
        f = self.field
        k = f.k
        if k == 1:
            out = 0
            for i, r in enumerate(self.rows):
                if (r & v).bit_count() & 1:
                    out |= 1 << i
            return out
        out = 0
        for i in range(self.nrows):
            acc = 0
            r = self.rows[i]
            for j in range(self.ncols):
                a = (r >> (j * k)) & f.mask
                if a:
                    acc ^= f.mul(a, (v >> (j * k)) & f.mask)
            out |= acc << (i * k)
        return out

    def __pow__(self, n: int) -> "FieldMatrix":
        if self.nrows != self.ncols:
            raise ValueError("matrix power needs a square matrix")
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        r = FieldMatrix.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix.from_cols(self.field, self.ncols, self.rows)

    def vstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_same(other)
        if other.ncols != self.ncols:
            raise ValueError("dimension mismatch in vstack")
        return FieldMatrix(
            self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows
        )

    # -- elimination --

    def rref(self) -> tuple["FieldMatrix", tuple[int, ...]]:
        """Reduced row-echelon form and the tuple of pivot columns."""
        f = self.field
        k = f.k
        mask = f.mask
        rows = list(self.rows)
        pivots = []
        r = 0
        for col in range(self.ncols):
            sh = col * k
            pivot = None
            for i in range(r, len(rows)):
                if (rows[i] >> sh) & mask:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            if k == 1:
                prow = rows[r]
                for i in range(len(rows)):
                    if i != r and ((rows[i] >> sh) & 1):
                        rows[i] ^= prow
            else:
                p = (rows[r] >> sh) & mask
                if p != 1:
                    rows[r] = vec_scale(f, rows[r], f.inv(p), self.ncols)
                prow = rows[r]
                for i in range(len(rows)):
                    if i == r:
                        continue
                    e = (rows[i] >> sh) & mask
                    if e:
                        rows[i] ^= vec_scale(f, prow, e, self.ncols)
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return FieldMatrix(f, self.nrows, self.ncols, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> tuple[int, ...]:
        """Basis of the right kernel, canonicalized to reduced echelon form.

        Returned as packed vectors of length ncols; empty tuple for injective
        maps.  Checks rank + nullity == ncols.
        """
        R, pivots = self.rref()
        f = self.field
        k = f.k
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = 1 << (fc * k)
            for r, pc in enumerate(pivots):
                e = R.entry(r, fc)
                if e:
                    v |= e << (pc * k)
            basis.append(v)
        if basis:
            B = FieldMatrix(f, len(basis), self.ncols, basis)
            basis = [row for row in B.rref()[0].rows if row]
        assert len(basis) + len(pivots) == self.ncols, "rank-nullity violated"
        return tuple(basis)

    def iterated_kernel(self, n: int | None = None) -> tuple[int, ...]:
        """Basis of ker(M^n); n defaults to ncols, which always stabilizes."""
        if self.nrows != self.ncols:
            raise ValueError("iterated kernel needs a square matrix")
        if n is None:
            n = self.ncols
        if n < 1:
            raise ValueError("power must be >= 1")
        return (self ** n).kernel()

    def solve(self, b: int) -> int:
        """One solution x of M x = b; raises NoSolution if inconsistent."""
        f = self.field
        k = f.k
        aug_col = self.ncols
        rows = [r | (vec_entry(f, b, i) << (aug_col * k)) for i, r in enumerate(self.rows)]
        A = FieldMatrix(f, self.nrows, self.ncols + 1, rows)
        R, pivots = A.rref()
        if pivots and pivots[-1] == aug_col:
            raise NoSolution("inconsistent linear system")
        x = 0
        for r, pc in enumerate(pivots):
            e = R.entry(r, aug_col)
            if e:
                x |= e << (pc * k)
        return x

    def inverse(self) -> "FieldMatrix":
        if self.nrows != self.ncols:
            raise NoSolution("only square matrices are invertible")
        f = self.field
        k = f.k
        n = self.ncols
        rows = [r | (1 << ((n + i) * k)) for i, r in enumerate(self.rows)]
        A = FieldMatrix(f, n, 2 * n, rows)
        R, pivots = A.rref()
        if pivots[:n] != tuple(range(n)) or len(pivots) != n:
            raise NoSolution("matrix is singular")
        shift = n * k
        return FieldMatrix(f, n, n, (r >> shift for r in R.rows))

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    # -- identity / hashing --

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and other.field.k == self.field.k
            and other.nrows == self.nrows
            and other.ncols == self.ncols
            and other.rows == self.rows
        )

    def __hash__(self) -> int:
        return hash((self.field.k, self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        f = self.field
        body = "; ".join(
            " ".join(f.pretty(self.entry(i, j)) for j in range(self.ncols))
            for i in range(self.nrows)
        )
        return f"FieldMatrix({f!r}, {self.nrows}x{self.ncols}: {body})"


def lift_matrix(field: Field, m: FieldMatrix) -> FieldMatrix:
    """Reinterpret a GF(2) matrix with 0/1 entries over a larger GF(2^k)."""
    if m.field.k != 1:
        raise ValueError("lift_matrix expects a GF(2) matrix")
    if field.k == 1:
        return m
    return FieldMatrix(
        field, m.nrows, m.ncols,
        (lift_vec(field, r, m.ncols) for r in m.rows),
    )


def span_equal(field: Field, vecs_a, vecs_b, ncols: int) -> bool:
    """Whether two lists of packed vectors span the same subspace."""
    def canon(vecs):
        vecs = [v for v in vecs if v]
        if not vecs:
            return ()
        M = FieldMatrix(field, len(vecs), ncols, vecs)
        return tuple(r for r in M.rref()[0].rows if r)

    return canon(vecs_a) == canon(vecs_b)
