"""Partial triple systems and Fischer spaces.

Points are dense indices 0..n-1; lines are sorted index triples kept in
lexicographic order.  Validation enforces the partial-linear-space axioms,
connectivity, the 0-2-3 collinearity property, and that any two intersecting
lines generate either a complete quadrilateral (6 points, 4 lines) or an
affine plane of order 3 (9 points, 12 lines).  Both checks together
characterize the spaces this package works on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class InvalidSpaceError(ValueError):
    """Input fails one of the Fischer space axioms."""


class PlaneType(enum.Enum):
    COMPLETE_QUADRILATERAL = "cq"
    AFFINE_PLANE = "affine"


@dataclass(frozen=True)
class SpaceMeta:
    """Catalog metadata; rank and symplectic flag are declared, not computed."""

    name: str
    rank: int
    symplectic: bool


class FischerSpace:
    """A validated partial triple system satisfying the Fischer space axioms.

    Immutable after construction; instances are only created by validate().
    """

    __slots__ = (
        "n_points", "labels", "lines", "meta", "collinear",
        "_wedge", "_line_set", "_lines_through", "_symplectic",
    )

    def __init__(self, n_points, labels, lines, meta, collinear, wedge,
                 lines_through, symplectic):
        self.n_points = n_points
        self.labels = labels
        self.lines = lines
        self.meta = meta
        self.collinear = collinear  # per point: bitmask of collinear points
        self._wedge = wedge
        self._line_set = frozenset(lines)
        self._lines_through = lines_through
        self._symplectic = symplectic

    def n_lines(self) -> int:
        return len(self.lines)

    def is_line(self, triple) -> bool:
        return tuple(sorted(triple)) in self._line_set

    def are_collinear(self, x: int, y: int) -> bool:
        return x != y and bool((self.collinear[x] >> y) & 1)

    def lines_through(self, x: int) -> tuple[tuple[int, int, int], ...]:
        return tuple(self.lines[i] for i in self._lines_through[x])

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self) -> str:
        name = self.meta.name if self.meta else "custom"
        return f"FischerSpace({name}: {self.n_points} points, {len(self.lines)} lines)"


def _line_mask(line) -> int:
    return (1 << line[0]) | (1 << line[1]) | (1 << line[2])


def validate(n_points: int, lines, labels=None, meta: SpaceMeta | None = None) -> FischerSpace:
    """Check the axioms and build the collinearity and wedge tables."""
    if n_points < 1:
        raise InvalidSpaceError("a space needs at least one point")
    norm = []
    for raw in lines:
        t = tuple(sorted(raw))
        if len(t) != 3 or len(set(t)) != 3:
            raise InvalidSpaceError(f"line {raw!r} does not have 3 distinct points")
        if t[0] < 0 or t[2] >= n_points:
            raise InvalidSpaceError(f"line {raw!r} has a point outside 0..{n_points - 1}")
        norm.append(t)
    norm.sort()

    wedge: dict[tuple[int, int], int] = {}
    pair_line: dict[tuple[int, int], tuple[int, int, int]] = {}
    for t in norm:
        x, y, z = t
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            if (a, b) in pair_line:
                other = pair_line[(a, b)]
                raise InvalidSpaceError(
                    f"lines {other} and {t} share two points {a}, {b}"
                )
            pair_line[(a, b)] = t
            wedge[(a, b)] = c
            wedge[(b, a)] = c

    collinear = [0] * n_points
    for (a, b) in pair_line:
        collinear[a] |= 1 << b
        collinear[b] |= 1 << a

    lines_through: list[list[int]] = [[] for _ in range(n_points)]
    for i, t in enumerate(norm):
        for p in t:
            lines_through[p].append(i)

    # connectivity under collinearity
    seen = 1
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            m = collinear[x] & ~seen
            while m:
                low = m & -m
                seen |= low
                nxt.append(low.bit_length() - 1)
                m ^= low
        frontier = nxt
    if seen != (1 << n_points) - 1:
        missing = next(i for i in range(n_points) if not (seen >> i) & 1)
        raise InvalidSpaceError(f"space is disconnected (point {missing} unreachable from 0)")

    # 0-2-3 property: no point sees exactly one point of a line it is not on
    for t in norm:
        lm = _line_mask(t)
        for x in range(n_points):
            if (lm >> x) & 1:
                continue
            c = (collinear[x] & lm).bit_count()
            if c == 1:
                raise InvalidSpaceError(
                    f"point {x} is collinear with exactly one point of line {t}"
                )

    space = FischerSpace(
        n_points,
        tuple(labels) if labels is not None else tuple(str(i) for i in range(n_points)),
        tuple(norm),
        meta,
        tuple(collinear),
        wedge,
        tuple(tuple(ls) for ls in lines_through),
        symplectic=True,  # provisional; fixed below
    )
    if len(space.labels) != n_points:
        raise InvalidSpaceError("label count differs from point count")

    # every pair of intersecting lines must generate a 6- or 9-point plane
    all_cq = True
    for x in range(n_points):
        through = space._lines_through[x]
        for i in range(len(through)):
            for j in range(i + 1, len(through)):
                t = plane_type(space, space.lines[through[i]], space.lines[through[j]])
                if t is not PlaneType.COMPLETE_QUADRILATERAL:
                    all_cq = False
    space._symplectic = all_cq
    return space


def wedge(s: FischerSpace, x: int, y: int) -> int:
    """The third point on the line through two collinear points."""
    if x == y:
        raise ValueError(f"wedge needs two distinct points, got {x} twice")
    try:
        return s._wedge[(x, y)]
    except KeyError:
        raise ValueError(f"points {x} and {y} are not collinear") from None


def generated_subspace(s: FischerSpace, seed) -> frozenset[int]:
    """Smallest point set containing the seed and closed under wedge."""
    out = _generated_subspace_capped(s, seed, s.n_points)
    assert out is not None
    return out


def _generated_subspace_capped(s: FischerSpace, seed, cap: int) -> frozenset[int] | None:
    """Wedge closure of the seed, or None as soon as it exceeds cap points."""
    pts = set(seed)
    if not pts:
        raise ValueError("seed must be nonempty")
    if len(pts) > cap:
        return None
    grew = True
    while grew:
        grew = False
        for x in list(pts):
            cm = s.collinear[x]
            for y in list(pts):
                if y > x and (cm >> y) & 1:
                    z = s._wedge[(x, y)]
                    if z not in pts:
                        pts.add(z)
                        grew = True
                        if len(pts) > cap:
                            return None
    return frozenset(pts)


def _lines_inside(s: FischerSpace, pts: frozenset[int]) -> list[tuple[int, int, int]]:
    pm = 0
    for p in pts:
        pm |= 1 << p
    return [t for t in s.lines if _line_mask(t) & ~pm == 0]


def plane_type(s: FischerSpace, line1, line2) -> PlaneType:
    """Classify the subspace generated by two distinct intersecting lines."""
    t1, t2 = tuple(sorted(line1)), tuple(sorted(line2))
    if t1 not in s._line_set or t2 not in s._line_set:
        raise ValueError("both arguments must be lines of the space")
    if t1 == t2:
        raise ValueError("lines must be distinct")
    if not set(t1) & set(t2):
        raise ValueError("lines must intersect")
    pts = generated_subspace(s, set(t1) | set(t2))
    inside = _lines_inside(s, pts)
    if len(pts) == 6:
        on_count = {p: sum(1 for t in inside if p in t) for p in pts}
        if len(inside) == 4 and all(c == 2 for c in on_count.values()):
            return PlaneType.COMPLETE_QUADRILATERAL
    elif len(pts) == 9:
        on_count = {p: sum(1 for t in inside if p in t) for p in pts}
        if len(inside) == 12 and all(c == 4 for c in on_count.values()):
            return PlaneType.AFFINE_PLANE
    raise InvalidSpaceError(
        f"lines {t1} and {t2} generate a {len(pts)}-point subspace that is "
        "neither a complete quadrilateral nor an affine plane"
    )


def is_symplectic_type(s: FischerSpace) -> bool:
    """True iff every pair of intersecting lines generates a quadrilateral."""
    return s._symplectic


def points_p0_p2(s: FischerSpace, line):
    """Partition the points off a line by how many of its points they see.

    Returns (P0, P2, P3) as sorted tuples; a count of exactly one would
    violate the 0-2-3 property and raises.
    """
    t = tuple(sorted(line))
    if t not in s._line_set:
        raise ValueError(f"{line!r} is not a line of the space")
    lm = _line_mask(t)
    p0, p2, p3 = [], [], []
    for x in range(s.n_points):
        if (lm >> x) & 1:
            continue
        c = (s.collinear[x] & lm).bit_count()
        if c == 0:
            p0.append(x)
        elif c == 2:
            p2.append(x)
        elif c == 3:
            p3.append(x)
        else:
            raise InvalidSpaceError(
                f"point {x} is collinear with exactly one point of line {t}"
            )
    return tuple(p0), tuple(p2), tuple(p3)


def cqs_through_line(s: FischerSpace, line) -> tuple[frozenset[int], ...]:
    """All complete quadrilaterals containing the given line, deterministically ordered."""
    t = tuple(sorted(line))
    _, p2, _ = points_p0_p2(s, t)
    seen = set()
    out = []
    for z in p2:
        plane = generated_subspace(s, set(t) | {z})
        if len(plane) == 6 and plane not in seen:
            seen.add(plane)
            out.append(plane)
    out.sort(key=lambda pts: tuple(sorted(pts)))
    return tuple(out)


def affine_planes_through_line(s: FischerSpace, line) -> tuple[frozenset[int], ...]:
    """All affine planes containing the given line, deterministically ordered."""
    t = tuple(sorted(line))
    seen = set()
    out = []
    for x in t:
        for other in s.lines_through(x):
            if other == t:
                continue
            plane = generated_subspace(s, set(t) | set(other))
            if len(plane) == 9 and plane not in seen:
                seen.add(plane)
                out.append(plane)
    out.sort(key=lambda pts: tuple(sorted(pts)))
    return tuple(out)


# -- catalog ------------------------------------------------------------------

CATALOG_NAMES = ("cq", "ag23", "w_a4", "w_d4", "3_3_sym4", "ag33", "su32")

_CATALOG_META = {
    "cq": SpaceMeta("cq", rank=3, symplectic=True),
    "ag23": SpaceMeta("ag23", rank=3, symplectic=False),
    "w_a4": SpaceMeta("w_a4", rank=4, symplectic=True),
    "w_d4": SpaceMeta("w_d4", rank=4, symplectic=True),
    "3_3_sym4": SpaceMeta("3_3_sym4", rank=4, symplectic=False),
    "ag33": SpaceMeta("ag33", rank=4, symplectic=False),
    "su32": SpaceMeta("su32", rank=4, symplectic=False),
}

# point labels a,b,c,x,y,z; lines l={a,b,c}, m={a,y,z}, n={b,x,z}, {c,x,y}
_CQ_LABELS = ("a", "b", "c", "x", "y", "z")
_CQ_LINES = ((0, 1, 2), (0, 4, 5), (1, 3, 5), (2, 3, 4))


def _build_cq() -> FischerSpace:
    return validate(6, _CQ_LINES, labels=_CQ_LABELS, meta=_CATALOG_META["cq"])


def _affine_space_lines(dim: int) -> tuple[list[tuple[int, ...]], list[str]]:
    """Points of F_3^dim with lines {p, q, -p-q}; index is base-3 big-endian."""
    n = 3 ** dim
    def unrank(i):
        digits = []
        for _ in range(dim):
            digits.append(i % 3)
            i //= 3
        return tuple(reversed(digits))
    def rank(v):
        i = 0
        for d in v:
            i = 3 * i + d
        return i
    pts = [unrank(i) for i in range(n)]
    lines = set()
    for i in range(n):
        for j in range(i + 1, n):
            third = tuple((-a - b) % 3 for a, b in zip(pts[i], pts[j]))
            lines.add(tuple(sorted((i, j, rank(third)))))
    labels = ["[" + ",".join(str(d) for d in v) + "]" for v in pts]
    return sorted(lines), labels


def _build_ag(dim: int, name: str) -> FischerSpace:
    lines, labels = _affine_space_lines(dim)
    return validate(3 ** dim, lines, labels=labels, meta=_CATALOG_META[name])


def catalog(name: str) -> FischerSpace:
    """One of the built-in spaces; group-derived entries go through presets."""
    if name == "cq":
        return _build_cq()
    if name == "ag23":
        return _build_ag(2, "ag23")
    if name == "ag33":
        return _build_ag(3, "ag33")
    if name in ("w_a4", "w_d4", "3_3_sym4", "su32"):
        from . import transposition

        preset_name = "sym5" if name == "w_a4" else name
        gens, seed = transposition.preset(preset_name)
        cls = transposition.conjugacy_class(gens, seed)
        return transposition.fischer_from_class(cls, meta=_CATALOG_META[name])
    raise ValueError(f"unknown catalog space {name!r}; choose from {CATALOG_NAMES}")


# -- file format ---------------------------------------------------------------
#
# .fischer text format:
#   fischer <n_points>
#   label <i> <string>          (optional, any number)
#   <i> <j> <k>                 (one line per geometric line)
# '#' starts a comment; the writer emits sorted triples in lexicographic order.


def space_to_text(s: FischerSpace) -> str:
    out = [f"fischer {s.n_points}"]
    for i, lab in enumerate(s.labels):
        if lab != str(i):
            out.append(f"label {i} {lab}")
    for t in s.lines:
        out.append(f"{t[0]} {t[1]} {t[2]}")
    return "\n".join(out) + "\n"


def save_space(s: FischerSpace, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(space_to_text(s))


def parse_space(text: str, meta: SpaceMeta | None = None) -> FischerSpace:
    n_points = None
    labels: dict[int, str] = {}
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if n_points is None:
            if parts[0] != "fischer" or len(parts) != 2:
                raise InvalidSpaceError(
                    f"line {lineno}: expected header 'fischer <n_points>'"
                )
            n_points = int(parts[1])
            continue
        if parts[0] == "label":
            labels[int(parts[1])] = stripped.split(None, 2)[2]
            continue
        if len(parts) != 3:
            raise InvalidSpaceError(f"line {lineno}: expected three point indices")
        try:
            lines.append(tuple(int(p) for p in parts))
        except ValueError:
            raise InvalidSpaceError(f"line {lineno}: bad point index in {parts}") from None
    if n_points is None:
        raise InvalidSpaceError("missing 'fischer <n_points>' header")
    label_list = [labels.get(i, str(i)) for i in range(n_points)]
    return validate(n_points, lines, labels=label_list, meta=meta)


def load_space(path, meta: SpaceMeta | None = None) -> FischerSpace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_space(fh.read(), meta=meta)
