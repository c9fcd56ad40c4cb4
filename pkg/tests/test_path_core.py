import pytest
from hypothesis import given, strategies as st

from staircase.path_core import (
    Corner,
    GenericStaircase,
    LatticePath,
    Point,
    StaircaseA,
    StaircaseB,
    StrictRightOfLine,
    augment_plus,
    avoids,
    boundary_contains,
    change_count,
    corner_count,
    delta_decode,
    delta_encode,
    format_path,
    is_admissible,
    parse_binary,
    parse_path,
    potential,
    ten_positions,
    touches_shifted_line,
    visited_points,
    waypoints,
    weight,
)


def P(x, y, steps):
    return LatticePath(Point(x, y), steps)


@pytest.mark.parametrize("path, pts", [
    (P(0, 0, "EN"), [(0, 0), (1, 0), (1, 1)]),
    (P(1, 0, ""), [(1, 0)]),
    (P(0, -1, "NEENN"), [(0, -1), (0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]),
])
def test_visited_points(path, pts):
    assert visited_points(path) == pts


@pytest.mark.parametrize("steps, nw", [("EEEE", 0), ("NEENENN", 2), ("NE", 1), ("EN", 0)])
def test_nw_corner_count(steps, nw):
    assert corner_count(LatticePath(steps=steps), Corner.NORTHWEST) == nw


def test_se_corner_count():
    assert corner_count(LatticePath(steps="ENEN"), Corner.SOUTHEAST) == 2


def test_augment_plus():
    assert augment_plus(P(0, 0, "EEN")) == P(0, -1, "NEENN")
    assert augment_plus(P(0, 0, "")) == P(0, -1, "NN")
    aug = augment_plus(P(0, 0, "EENEN"))
    assert aug == P(0, -1, "NEENENN") and corner_count(aug) == 2


@pytest.mark.parametrize("boundary, point, inside", [
    (StaircaseA(1, 1), (1, 1), True),
    (StaircaseA(1, 1), (2, 1), False),
    (StaircaseB(2), (3, 2), True),
    (StaircaseB(2), (4, 2), False),
    (StaircaseB(0), (1, 7), True),
    (StaircaseB(0), (2, 7), False),
])
def test_boundary_contains(boundary, point, inside):
    assert boundary_contains(boundary, Point(*point)) is inside


def test_line_has_no_point_set():
    with pytest.raises(TypeError):
        boundary_contains(StrictRightOfLine(1), Point(0, 0))


@pytest.mark.parametrize("steps, boundary, ok", [
    ("EEN", StaircaseA(1, 1), True),
    ("ENE", StaircaseA(1, 1), False),
    ("EEEN", StrictRightOfLine(2), True),
    ("EENE", StrictRightOfLine(2), False),
    ("", StrictRightOfLine(0), True),
    ("", StrictRightOfLine(5), True),
])
def test_avoids(steps, boundary, ok):
    assert avoids(LatticePath(steps=steps), boundary) is ok


def test_line_exemption_only_at_start():
    # a path that returns to the origin cannot exist, but one starting elsewhere on the line is rejected
    assert not avoids(P(2, 1, "E"), StrictRightOfLine(2))


@pytest.mark.parametrize("pt, k, val", [((3, 1), 1, 2), ((0, 0), 7, 0), ((5, 2), 2, 1)])
def test_potential(pt, k, val):
    assert potential(Point(*pt), k) == val


@pytest.mark.parametrize("steps, hit", [("EENEE", True), ("EEEEE", False), ("NEEEE", True)])
def test_touches_shifted_line(steps, hit):
    assert touches_shifted_line(LatticePath(steps=steps), 1) is hit


def test_waypoints():
    assert [p for _, p in waypoints(LatticePath(steps="NEEEE"), 1)] == [(2, 1)]
    assert [p for _, p in waypoints(LatticePath(steps="ENEEENNEE"), 1)] == [(2, 1), (4, 3)]
    assert waypoints(LatticePath(steps="EEEEEE"), 3) == []


@pytest.mark.parametrize("bits, steps", [("00000", "EEEEE"), ("11111", "NEEEE"), ("1110011", "NEENENE")])
def test_delta_decode(bits, steps):
    assert delta_decode(bits) == LatticePath(steps=steps)


def test_weight_and_changes():
    assert weight("1110011") == 5
    assert change_count("0110") == 2
    assert ten_positions("01010") == [2, 4]


@pytest.mark.parametrize("bits, ok", [("00111", True), ("01010", False)])
def test_admissible(bits, ok):
    assert is_admissible(bits, 1, 2) is ok


def test_admissible_length_mismatch():
    with pytest.raises(ValueError):
        is_admissible("0101", 1, 2)


def test_literals():
    p = parse_path("@1,-2:ENN")
    assert p == P(1, -2, "ENN") and format_path(p) == "@1,-2:ENN"
    assert parse_path("EN") == P(0, 0, "EN") and str(parse_path("EN")) == "EN"
    assert parse_path("") == P(0, 0, "")
    for bad in ("EX", "@1:EN", "@a,b:E"):
        with pytest.raises(ValueError):
            parse_path(bad)
    assert parse_binary(" 0110 ") == "0110"
    with pytest.raises(ValueError):
        parse_binary("012")


def test_path_properties():
    p = P(1, 2, "ENNE")
    assert p.end == (3, 4) and p.height == 2 and p.width == 2 and len(p) == 4
    with pytest.raises(ValueError):
        LatticePath(steps="ENX")


def test_validated_boundaries():
    for bad in (lambda: StaircaseA(0, 1), lambda: StaircaseB(-1), lambda: StrictRightOfLine(-1),
                lambda: GenericStaircase(Point(0, 0), "")):
        with pytest.raises(ValueError):
            bad()


# ---------------------------------------------------------------------------
# properties

bitstrings = st.text(alphabet="01", max_size=30)


@given(bitstrings)
def test_delta_roundtrip(bits):
    assert delta_encode(delta_decode(bits)) == bits


@given(bitstrings)
def test_delta_north_count_is_change_count(bits):
    # prepend the implicit leading zero
    assert delta_decode(bits).height == change_count("0" + bits)


def _unrolled(start, period, limit):
    x, y = start
    pts = {(x, y)}
    while x <= limit and y <= limit:
        for c in period:
            x, y = (x + 1, y) if c == "E" else (x, y + 1)
            pts.add((x, y))
    return pts


@given(st.integers(1, 4), st.integers(1, 4), st.integers(-1, 14), st.integers(-1, 14))
def test_staircase_a_matches_unrolled(s, t, x, y):
    pts = _unrolled((0, t), "E" * s + "N" * t, 40)
    assert boundary_contains(StaircaseA(s, t), Point(x, y)) == ((x, y) in pts)


@given(st.integers(0, 4), st.integers(-1, 14), st.integers(-1, 14))
def test_staircase_b_matches_unrolled(s, x, y):
    head = {(i, 2) for i in range(s + 2)}
    pts = head | _unrolled((s + 1, 2), "NN" + "E" * s, 40)
    assert boundary_contains(StaircaseB(s), Point(x, y)) == ((x, y) in pts)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(-1, 12), st.integers(-1, 12))
def test_generic_agrees_with_a(s, t, x, y):
    g = GenericStaircase(Point(0, t), "E" * s + "N" * t)
    assert boundary_contains(g, Point(x, y)) == boundary_contains(StaircaseA(s, t), Point(x, y))


def _segments(pts):
    return list(zip(pts, pts[1:]))


def _axis_segments_meet(a, b):
    (ax0, ay0), (ax1, ay1) = a
    (bx0, by0), (bx1, by1) = b
    return (max(min(ax0, ax1), min(bx0, bx1)) <= min(max(ax0, ax1), max(bx0, bx1))
            and max(min(ay0, ay1), min(by0, by1)) <= min(max(ay0, ay1), max(by0, by1)))


@given(st.text(alphabet="EN", max_size=12), st.integers(1, 3), st.integers(1, 3))
def test_point_avoidance_equals_geometric_avoidance(steps, s, t):
    # both the path and the staircase are unions of unit axis-parallel segments
    from staircase.render import boundary_polyline

    path = LatticePath(steps=steps)
    a = StaircaseA(s, t)
    walls = _segments(boundary_polyline(a, 14, 14))
    own = _segments(visited_points(path)) or [(Point(0, 0), Point(0, 0))]
    crosses = any(_axis_segments_meet(p, w) for p in own for w in walls)
    assert avoids(path, a) == (not crosses)
