import itertools

import pytest

from matsuo2 import fischer
from matsuo2.fischer import (
    InvalidSpaceError,
    PlaneType,
    catalog,
    generated_subspace,
    is_symplectic_type,
    parse_space,
    plane_type,
    points_p0_p2,
    space_to_text,
    validate,
    wedge,
)

CQ_LINES = [(0, 1, 2), (0, 4, 5), (1, 3, 5), (2, 3, 4)]


def test_validate_cq():
    sp = validate(6, CQ_LINES)
    assert sp.n_points == 6
    assert len(sp.lines) == 4


def test_validate_single_line():
    sp = validate(3, [(0, 1, 2)])
    assert sp.lines == ((0, 1, 2),)


def test_reject_two_shared_points():
    with pytest.raises(InvalidSpaceError, match="share two points"):
        validate(4, [(0, 1, 2), (0, 1, 3)])


def test_reject_duplicate_point_in_line():
    with pytest.raises(InvalidSpaceError, match="3 distinct points"):
        validate(3, [(0, 1, 1)])


def test_reject_point_out_of_range():
    with pytest.raises(InvalidSpaceError, match="outside"):
        validate(3, [(0, 1, 5)])


def test_reject_disconnected():
    with pytest.raises(InvalidSpaceError, match="disconnected"):
        validate(6, [(0, 1, 2), (3, 4, 5)])


def test_reject_zero_two_three_violation():
    # point 3 sees exactly one point of line (0, 1, 2)
    with pytest.raises(InvalidSpaceError, match="exactly one point"):
        validate(5, [(0, 1, 2), (0, 3, 4)])


def test_wedge_cq_examples():
    sp = catalog("cq")
    a, b, c, x, y, z = range(6)
    assert wedge(sp, a, b) == c
    assert wedge(sp, x, b) == z
    with pytest.raises(ValueError):
        wedge(sp, a, a)
    with pytest.raises(ValueError):
        wedge(sp, a, x)  # opposite vertices are not collinear


def test_wedge_symmetric_everywhere(spaces):
    for sp in spaces.values():
        for x in range(sp.n_points):
            for y in range(x + 1, sp.n_points):
                if sp.are_collinear(x, y):
                    assert wedge(sp, x, y) == wedge(sp, y, x)


def test_generated_subspace_single_line():
    sp = catalog("cq")
    assert generated_subspace(sp, {0, 1, 2}) == frozenset({0, 1, 2})


def test_generated_subspace_two_lines_w_a4(spaces):
    sp = spaces["w_a4"]
    l1 = sp.lines[0]
    l2 = next(t for t in sp.lines[1:] if set(t) & set(l1))
    assert len(generated_subspace(sp, set(l1) | set(l2))) == 6


def test_generated_subspace_two_lines_ag23(spaces):
    sp = spaces["ag23"]
    l1 = sp.lines[0]
    l2 = next(t for t in sp.lines[1:] if set(t) & set(l1))
    assert len(generated_subspace(sp, set(l1) | set(l2))) == 9


def test_plane_type_examples(spaces):
    cq = spaces["cq"]
    for l1, l2 in itertools.combinations(cq.lines, 2):
        assert plane_type(cq, l1, l2) is PlaneType.COMPLETE_QUADRILATERAL
    ag = spaces["ag23"]
    kinds = set()
    for l1, l2 in itertools.combinations(ag.lines, 2):
        if set(l1) & set(l2):
            kinds.add(plane_type(ag, l1, l2))
    assert kinds == {PlaneType.AFFINE_PLANE}
    mixed = spaces["3_3_sym4"]
    kinds = set()
    for l1, l2 in itertools.combinations(mixed.lines, 2):
        if set(l1) & set(l2):
            kinds.add(plane_type(mixed, l1, l2))
    assert kinds == {PlaneType.COMPLETE_QUADRILATERAL, PlaneType.AFFINE_PLANE}


def test_plane_type_rejects_bad_arguments(spaces):
    sp = spaces["ag23"]
    with pytest.raises(ValueError):
        plane_type(sp, sp.lines[0], sp.lines[0])
    disjoint = next(
        (l1, l2)
        for l1, l2 in itertools.combinations(sp.lines, 2)
        if not set(l1) & set(l2)
    )
    with pytest.raises(ValueError):
        plane_type(sp, *disjoint)


EXPECTED = {
    # name: (points, rank, symplectic)
    "cq": (6, 3, True),
    "ag23": (9, 3, False),
    "w_a4": (10, 4, True),
    "w_d4": (12, 4, True),
    "3_3_sym4": (18, 4, False),
    "ag33": (27, 4, False),
    "su32": (36, 4, False),
}


def test_catalog_metadata(spaces):
    for name, (pts, rank, sympl) in EXPECTED.items():
        sp = spaces[name]
        assert sp.n_points == pts
        assert sp.meta.rank == rank
        assert sp.meta.symplectic is sympl
        assert is_symplectic_type(sp) is sympl


def test_catalog_ag33_line_count(spaces):
    assert len(spaces["ag33"].lines) == 117


def test_catalog_unknown_name():
    with pytest.raises(ValueError):
        catalog("nope")


def test_points_p0_p2_cq(spaces):
    p0, p2, p3 = points_p0_p2(spaces["cq"], (0, 1, 2))
    assert p0 == ()
    assert p2 == (3, 4, 5)
    assert p3 == ()


def test_points_p0_p2_ag23(spaces):
    for t in spaces["ag23"].lines:
        p0, p2, p3 = points_p0_p2(spaces["ag23"], t)
        assert (p0, p2) == ((), ())
        assert len(p3) == 6


def test_points_p0_p2_w_a4(spaces):
    sp = spaces["w_a4"]
    idx = {lab: i for i, lab in enumerate(sp.labels)}
    t = tuple(sorted((idx["(1 2)"], idx["(1 3)"], idx["(2 3)"])))
    p0, p2, _ = points_p0_p2(sp, t)
    assert len(p0) == 1 and sp.labels[p0[0]] == "(4 5)"
    assert len(p2) == 6


def test_file_round_trip(tmp_path, spaces):
    for name, sp in spaces.items():
        path = tmp_path / f"{name}.fischer"
        fischer.save_space(sp, path)
        loaded = fischer.load_space(path)
        assert loaded.n_points == sp.n_points
        assert loaded.lines == sp.lines
        assert loaded.labels == sp.labels


def test_parse_rejects_missing_header():
    with pytest.raises(InvalidSpaceError, match="header"):
        parse_space("0 1 2\n")


def test_parse_rejects_bad_triple():
    text = "fischer 3\n0 1\n"
    with pytest.raises(InvalidSpaceError, match="three point indices"):
        parse_space(text)


def test_writer_emits_sorted_lines(spaces):
    text = space_to_text(spaces["cq"])
    rows = [l for l in text.splitlines() if l and l[0].isdigit()]
    assert rows == sorted(rows)
    assert text.splitlines()[0] == "fischer 6"


def test_comments_and_labels_parse():
    text = "# a comment\nfischer 3\nlabel 0 alpha beta\n0 1 2  # inline\n"
    sp = parse_space(text)
    assert sp.labels[0] == "alpha beta"
    assert sp.lines == ((0, 1, 2),)
