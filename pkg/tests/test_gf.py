import random

import pytest

from matsuo2.gf import (
    Field,
    FieldMatrix,
    NoSolution,
    fel_inv,
    fel_mul,
    lift_matrix,
    span_equal,
    vec_from_list,
    vec_to_list,
)


def test_gf4_omega_squared():
    f = Field(2)
    w = 2
    assert f.mul(w, w) == 3  # w^2 = w + 1


def test_one_is_identity():
    for k in (1, 2, 3, 4, 8):
        f = Field(k)
        for a in f.elements():
            assert f.mul(1, a) == a


def test_gf8_associativity_exhaustive():
    f = Field(3)
    for a in f.elements():
        for b in f.elements():
            for c in f.elements():
                assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_field_axioms_exhaustive(k):
    f = Field(k)
    els = list(f.elements())
    for a in els:
        assert f.add(a, a) == 0  # characteristic 2
        assert f.add(a, 0) == a
        assert f.mul(a, 0) == 0
        for b in els:
            assert f.mul(a, b) == f.mul(b, a)
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) < f.order
            for c in els:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in f.nonzero():
        assert f.mul(a, f.inv(a)) == 1


def test_inverse_exhaustive_gf8():
    f = Field(3)
    for a in f.nonzero():
        assert f.mul(a, f.inv(a)) == 1


def test_zero_has_no_inverse():
    f = Field(4)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_nonzero_elements_cyclic():
    for k in (2, 3, 4, 8):
        f = Field(k)
        g = f.generator
        seen = set()
        x = 1
        for _ in range(f.order - 1):
            seen.add(x)
            x = f.mul(x, g)
        assert seen == set(f.nonzero())


def test_fel_wrappers():
    f = Field(2)
    w = f.el(2)
    assert fel_mul(w, w) == f.el(3)
    assert fel_inv(w) == f.el(3)
    assert fel_inv(f.el(1)) == f.el(1)
    assert repr(w) == "w"
    assert repr(f.el(3)) == "w+1"
    assert (w + w).bits == 0


def test_fel_mixed_fields_rejected():
    a = Field(2).el(1)
    b = Field(3).el(1)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a + b


def test_fields_with_equal_k_interchangeable():
    assert Field(3) == Field(3)
    assert Field(3).el(5) == Field(3).el(5)
    assert hash(Field(4)) == hash(Field(4))


def test_fel_gf8_inverse_sweep():
    f = Field(3)
    for a in f.nonzero():
        assert fel_mul(f.el(a), fel_inv(f.el(a))) == f.el(1)


# -- matrices ---------------------------------------------------------------


def test_kernel_zero_matrix():
    f = Field(1)
    m = FieldMatrix.zeros(f, 3, 3)
    assert m.kernel() == (0b001, 0b010, 0b100)


def test_kernel_identity_empty():
    f = Field(1)
    assert FieldMatrix.identity(f, 4).kernel() == ()


def test_rank_identity():
    for k in (1, 2):
        f = Field(k)
        for n in (1, 3, 5):
            assert FieldMatrix.identity(f, n).rank() == n


def test_iterated_kernel_jordan_block():
    f = Field(1)
    # nilpotent 2x2 Jordan block: e2 -> e1 -> 0
    m = FieldMatrix.from_rows(f, [[0, 1], [0, 0]])
    assert len(m.kernel()) == 1
    assert m.iterated_kernel(2) == (0b01, 0b10)


def test_iterated_kernel_monotone_and_stable():
    rng = random.Random(20230822)
    for k in (1, 2):
        f = Field(k)
        for _ in range(25):
            n = rng.randrange(1, 7)
            m = FieldMatrix.from_rows(
                f, [[rng.randrange(f.order) for _ in range(n)] for _ in range(n)]
            )
            dims = [len(m.iterated_kernel(p)) for p in range(1, n + 2)]
            assert all(d1 <= d2 for d1, d2 in zip(dims, dims[1:]))
            assert dims[-1] == dims[-2]  # stabilized by n = ncols
            big = m.iterated_kernel()
            if big:
                B = FieldMatrix.from_cols(f, n, big)
                for v in m.kernel():
                    B.solve(v)  # ker(M) inside ker(M^n); raises otherwise


def test_kernel_contains_plain_kernel():
    f = Field(1)
    m = FieldMatrix.from_rows(f, [[1, 1, 0], [0, 0, 0], [0, 1, 1]])
    ker = m.kernel()
    big = m.iterated_kernel()
    for v in ker:
        # v must be a combination of the iterated-kernel basis
        B = FieldMatrix.from_cols(f, 3, big)
        B.solve(v)  # raises if not in span


def test_solve_basic_and_inconsistent():
    f = Field(1)
    m = FieldMatrix.from_rows(f, [[1, 0], [1, 0], [0, 1]])
    b = vec_from_list(f, [1, 1, 0])
    x = m.solve(b)
    assert m.matvec(x) == b
    with pytest.raises(NoSolution):
        m.solve(vec_from_list(f, [1, 0, 0]))


def test_solve_gf4():
    f = Field(2)
    m = FieldMatrix.from_rows(f, [[2, 1], [1, 1]])
    b = vec_from_list(f, [3, 2])
    x = m.solve(b)
    assert m.matvec(x) == b


def test_inverse_round_trip():
    rng = random.Random(7)
    for k in (1, 2, 3):
        f = Field(k)
        found = 0
        while found < 5:
            n = 4
            m = FieldMatrix.from_rows(
                f, [[rng.randrange(f.order) for _ in range(n)] for _ in range(n)]
            )
            try:
                mi = m.inverse()
            except NoSolution:
                continue
            found += 1
            assert m * mi == FieldMatrix.identity(f, n)
            assert mi * m == FieldMatrix.identity(f, n)


def test_matmul_agrees_with_entrywise_definition():
    rng = random.Random(99)
    for k in (1, 2, 4):
        f = Field(k)
        a = FieldMatrix.from_rows(
            f, [[rng.randrange(f.order) for _ in range(4)] for _ in range(3)]
        )
        b = FieldMatrix.from_rows(
            f, [[rng.randrange(f.order) for _ in range(2)] for _ in range(4)]
        )
        c = a * b
        for i in range(3):
            for j in range(2):
                s = 0
                for t in range(4):
                    s ^= f.mul(a.entry(i, t), b.entry(t, j))
                assert c.entry(i, j) == s


def test_dimension_mismatch_errors():
    f = Field(1)
    a = FieldMatrix.identity(f, 3)
    b = FieldMatrix.identity(f, 4)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a + b


def test_kernel_recomputation_bit_identical():
    f = Field(2)
    m = FieldMatrix.from_rows(f, [[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert m.kernel() == m.kernel()
    assert m.rref()[0].rows == m.rref()[0].rows


def test_matvec_roundtrip_lists():
    f = Field(3)
    m = FieldMatrix.from_rows(f, [[1, 2], [4, 7], [0, 3]])
    v = vec_from_list(f, [5, 6])
    out = m.matvec(v)
    expect = []
    for i in range(3):
        s = 0
        for j in range(2):
            s ^= f.mul(m.entry(i, j), vec_entry_list(v, f, j))
        expect.append(s)
    assert vec_to_list(f, out, 3) == expect


def vec_entry_list(v, f, j):
    return (v >> (j * f.k)) & f.mask


def test_lift_matrix_and_span_equal():
    f2 = Field(1)
    f4 = Field(2)
    m = FieldMatrix.from_rows(f2, [[1, 0, 1], [0, 1, 1]])
    lifted = lift_matrix(f4, m)
    assert lifted.entry(0, 2) == 1
    assert span_equal(f2, [0b011, 0b101], [0b101, 0b110], 3)
    assert not span_equal(f2, [0b001], [0b010], 3)
