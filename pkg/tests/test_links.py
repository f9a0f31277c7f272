import random

import pytest

from bitorus.diagonals import decompose
from bitorus.links import Link, is_knot, link_permutation, link_reduce, loop_count, orientation_link
from bitorus.surface import GridParams


def all_links_of_total(total):
    for a in range(total + 1):
        for b in range(total - a + 1):
            for c in range(total - a - b + 1):
                yield Link(a, b, c, total - a - b - c)


def test_permutation_examples():
    assert link_permutation(Link(1, 0, 0, 0)) == [0]
    assert link_permutation(Link(0, 0, 1, 1)) == [1, 0]
    assert link_permutation(Link(2, 1, 0, 1)) == [2, 3, 1, 0]
    assert loop_count(Link(2, 1, 0, 1)) == 1


def test_empty_link_rejected():
    with pytest.raises(ValueError):
        link_permutation(Link(0, 0, 0, 0))
    with pytest.raises(ValueError):
        Link(-1, 1, 0, 0)


def test_permutation_bijective_exhaustively():
    for total in range(1, 13):
        for link in all_links_of_total(total):
            assert sorted(link_permutation(link)) == list(range(total))


def test_loop_counts():
    assert loop_count(Link(1, 0, 0, 0)) == 1
    assert is_knot(Link(1, 0, 0, 0))
    assert loop_count(Link(3, 2, 0, 1)) == 1
    assert loop_count(Link(3, 3, 2, 2)) == 1


def test_reduce_requires_strict_precondition():
    link = Link(5, 6, 1, 1)
    assert link.t == 5
    with pytest.raises(ValueError):
        link_reduce(link)


def test_reduce_example():
    link = Link(7, 8, 1, 1)
    assert link.t == 5
    reduced = link_reduce(link)
    assert reduced.as_tuple() == (2, 3, 1, 1)
    assert loop_count(reduced) == loop_count(link)


def test_reduce_preserves_loop_count_randomized():
    rng = random.Random(0xBEEF)
    done = 0
    while done < 2000:
        c = rng.randint(0, 15)
        d = rng.randint(0, 15)
        a = rng.randint(1, 90)
        b = rng.randint(1, 90)
        link = Link(a, b, c, d)
        t = link.t
        if not (a > t and b > t and t >= c + d):
            continue
        done += 1
        assert loop_count(link_reduce(link)) == loop_count(link)


def test_orientation_link_matches_known_tuple():
    dec = decompose(GridParams(1, 3))
    assert orientation_link(dec, "UR").as_tuple() == (3, 2, 0, 1)


@pytest.mark.parametrize("n,m", [(1, 3), (2, 3), (2, 2), (3, 5)])
def test_all_right_and_all_up_orientations(n, m):
    dec = decompose(GridParams(n, m))
    count = len(dec.diagonals)
    right = orientation_link(dec, "R" * count)
    assert (right.a, right.b) == (0, 0)
    assert right.c + right.d == 2 * n
    up = orientation_link(dec, "U" * count)
    assert (up.c, up.d) == (0, 0)
    assert up.a + up.b == 2 * m


def test_orientation_link_validates_length_and_characters():
    dec = decompose(GridParams(1, 3))
    with pytest.raises(ValueError):
        orientation_link(dec, "U")
    with pytest.raises(ValueError):
        orientation_link(dec, "UX")


def test_t_accessor():
    assert Link(1, 2, 3, 4).t == -1 + 2 + 6 + 8
