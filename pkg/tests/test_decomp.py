import itertools
import json
import random

import pytest

from matsuo2 import decomp, fischer, matsuo
from matsuo2.decomp import (
    classify_space,
    cq_pair_case,
    decompose_line,
    fusion_table,
    is_z2_graded,
    line_verdict,
    symplectic_structured_basis,
)


def test_cq_dims_and_common_one_part(algebras):
    alg = algebras["cq"]
    one_parts = set()
    for t in alg.space.lines:
        d = decompose_line(alg, t)
        assert d.gen_dims() == (4, 2)
        assert (d.eigen0_dim, d.eigen1_dim) == (4, 2)
        assert d.semisimple
        one_parts.add(d.basis1)
    assert len(one_parts) == 1


def test_cq_fusion_empty_one_one(algebras):
    alg = algebras["cq"]
    for t in alg.space.lines:
        table = fusion_table(alg, decompose_line(alg, t))
        assert table.entry(1, 1) == frozenset()
        assert table.entry(0, 0) <= {0}
        assert table.entry(0, 1) <= {1}
        assert is_z2_graded(table)


def test_affine_dims_and_fusion(algebras):
    alg = algebras["ag23"]
    for t in alg.space.lines:
        d = decompose_line(alg, t)
        assert d.gen_dims() == (5, 4)
        assert (d.eigen0_dim, d.eigen1_dim) == (4, 4)
        assert not d.semisimple
        table = fusion_table(alg, d)
        assert is_z2_graded(table)
        assert table.entry(1, 1) == frozenset({0})


def test_affine_reduced_semisimple(reduced_algebras):
    red = reduced_algebras["ag23"]
    for t in red.space.lines:
        d = decompose_line(red, t)
        assert d.gen_dims() == (4, 4)
        assert d.semisimple
        assert is_z2_graded(fusion_table(red, d))


def test_split_reconstructs_vectors(algebras):
    alg = algebras["w_d4"]
    d = decompose_line(alg, alg.space.lines[0])
    rng = random.Random(5)
    for _ in range(50):
        v = rng.randrange(1 << alg.dim)
        v0, v1 = d.split(v)
        assert v0 ^ v1 == v
        assert d.component_flags(v) == (v0 != 0, v1 != 0)


def test_decomposition_exhausts_algebra(algebras):
    for alg in algebras.values():
        for t in alg.space.lines[:3]:
            d = decompose_line(alg, t)
            assert len(d.basis0) + len(d.basis1) == alg.dim


def test_classification_biconditional(spaces, algebras):
    for name in ("cq", "ag23", "w_a4", "3_3_sym4"):
        gv = classify_space(algebras[name])
        expected = fischer.is_symplectic_type(spaces[name]) or name == "ag23"
        assert gv.graded is expected


def test_witness_recorded_for_failing_lines(algebras):
    gv = classify_space(algebras["3_3_sym4"])
    failing = [v for v in gv.verdicts if not v.z2_graded]
    assert failing
    for v in failing:
        w = v.witness
        assert w is not None
        assert w.bad_component != 0
        d = v.decomposition
        assert d.component_flags(w.u) == (False, True)
        assert d.component_flags(w.v) == (False, True)
        p = matsuo.multiply(algebras["3_3_sym4"], w.u, w.v)
        assert p == w.product
        assert d.component_flags(p)[1] is True


def test_good_lines_3_3_sym4(algebras):
    gv = classify_space(algebras["3_3_sym4"])
    good = set(gv.good_lines)
    graded = {v.line for v in gv.verdicts if v.z2_graded}
    assert good  # such lines exist
    assert good <= graded  # lines only in affine planes stay graded
    assert graded == good  # observed: the graded lines are exactly those


def test_good_lines_all_of_ag33(spaces):
    # every line of the affine 3-space avoids quadrilaterals entirely
    sp = spaces["ag33"]
    for t in sp.lines[:10]:
        assert fischer.cqs_through_line(sp, t) == ()


def test_verdict_json_schema(algebras):
    v = line_verdict(algebras["ag23"], algebras["ag23"].space.lines[0])
    d = v.to_json_dict()
    assert set(d) == {
        "line", "gen_dims", "eigen_dims", "semisimple", "fusion",
        "z2_graded", "witness",
    }
    assert set(d["fusion"]) == {"00", "01", "11"}
    assert d["witness"] is None
    json.dumps(d)
    gv = classify_space(algebras["cq"])
    json.dumps(gv.to_json_dict())


def test_structured_basis_cq(algebras):
    alg = algebras["cq"]
    sb = symplectic_structured_basis(alg, (0, 1, 2))
    assert sb.line_points == (0, 1, 2)
    assert len(sb.quad_sums) == 1  # the whole space is the only quadrilateral
    assert sb.quad_sums[0][1] == (1 << 6) - 1
    assert sb.p0_points == ()
    assert len(sb.one_part) == 3


def test_structured_basis_w_a4_and_w_d4(algebras):
    for name in ("w_a4", "w_d4"):
        alg = algebras[name]
        for t in alg.space.lines:
            sb = symplectic_structured_basis(alg, t)
            d = decompose_line(alg, t)
            assert 3 + len(sb.quad_sums) + len(sb.p0_points) == d.eigen0_dim
            assert len(sb.one_part) >= d.eigen1_dim


def test_structured_basis_requires_symplectic(algebras):
    with pytest.raises(ValueError, match="symplectic"):
        symplectic_structured_basis(algebras["ag23"], algebras["ag23"].space.lines[0])


def test_structured_basis_requires_full_algebra(reduced_algebras):
    red = reduced_algebras["cq"]
    with pytest.raises(ValueError, match="full"):
        symplectic_structured_basis(red, (0, 1, 2))


def test_cq_pair_case_w_a4(spaces):
    sp = spaces["w_a4"]
    for t in sp.lines:
        quads = fischer.cqs_through_line(sp, t)
        assert len(quads) == 2
        res = cq_pair_case(sp, t, quads[0], quads[1])
        assert res.case == "a"
        p0, _, _ = fischer.points_p0_p2(sp, t)
        assert res.w in p0


def test_cq_pair_case_w_d4(spaces):
    sp = spaces["w_d4"]
    seen = set()
    for t in sp.lines:
        for q1, q2 in itertools.combinations(fischer.cqs_through_line(sp, t), 2):
            res = cq_pair_case(sp, t, q1, q2)
            seen.add(res.case)
            if res.case == "b":
                assert res.third_quad is not None
                assert set(t) < res.third_quad
    assert seen == {"b"}


def test_cq_pair_case_rejects_equal_quads(spaces):
    sp = spaces["w_a4"]
    t = sp.lines[0]
    q = fischer.cqs_through_line(sp, t)[0]
    with pytest.raises(ValueError):
        cq_pair_case(sp, t, q, q)


def test_classify_threads_agree(algebras):
    a = classify_space(algebras["w_d4"], threads=1)
    b = classify_space(algebras["w_d4"], threads=4)
    assert a.to_json_dict() == b.to_json_dict()


def test_default_threads_env(monkeypatch):
    monkeypatch.setenv("MATSUO2_THREADS", "3")
    assert decomp.default_threads() == 3
    monkeypatch.setenv("MATSUO2_THREADS", "bogus")
    assert decomp.default_threads() == 1
    monkeypatch.delenv("MATSUO2_THREADS")
    assert decomp.default_threads() == 1
