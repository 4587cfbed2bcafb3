import pytest

from tspread import (
    Ambient,
    DomainError,
    SlexSegment,
    binom,
    card_A,
    card_M,
    decompose_by_min,
    enumerate_A,
    enumerate_M,
    iter_A_ascending,
    max_A,
    min_A,
    predecessor_in_A,
    rank_in_A,
    segment_card,
    segment_ending_at,
    successor_in_A,
    take_smallest_segment,
)
from tspread.oracle import oracle_enumerate_A, oracle_enumerate_M, oracle_rank

from reference_data import A_3_4_T2_LISTING


def test_binom_conventions():
    assert binom(0, 0) == 1
    assert binom(5, 0) == 1
    assert binom(3, 5) == 0
    assert binom(-1, 0) == 0
    assert binom(9, 3) == 84


def test_card_M_values():
    assert card_M(9, 2, 3) == 21
    assert card_M(9, 2, 3) == len(oracle_enumerate_M(9, 2, 3))
    for n in (1, 4, 9):
        assert card_M(n, 1, 3) == n
    assert card_M(13, 4, 2) == 210
    assert card_M(5, 4, 3) == 0


def test_enumerate_M_examples():
    listing = enumerate_M(9, 2, 3)
    assert listing[0] == (1, 4)
    assert listing[-1] == (6, 9)
    assert len(listing) == 21
    assert enumerate_M(9, 0, 3) == [()]
    assert enumerate_M(5, 2, 3) == [(1, 4), (1, 5), (2, 5)]


def test_enumerate_M_matches_oracle():
    for t in (1, 2, 3, 4):
        for n in range(1, 11):
            for d in range(0, 5):
                assert enumerate_M(n, d, t) == oracle_enumerate_M(n, d, t)


def test_card_A_values():
    assert card_A(5, 2) == 6
    assert card_A(6, 4) == 84
    assert card_A(3, 4) == 20
    assert card_A(3, 1) == 1


def test_card_A_spread_independence():
    # the same (k, l) count arises at every spread once the ambient fits
    for k, l in [(2, 3), (3, 2), (4, 3), (2, 4)]:
        counts = set()
        for t in (1, 2, 3):
            amb = Ambient(k + t * (l - 1) + 1, t)
            counts.add(len(enumerate_A(k, l, amb)))
        assert counts == {card_A(k, l)}


def test_enumerate_A_examples():
    amb = Ambient(9, 3)
    assert enumerate_A(5, 2, amb) == [
        (1, 9), (2, 9), (3, 9), (4, 9), (5, 9), (6, 9),
    ]
    amb2 = Ambient(13, 2)
    listing = enumerate_A(3, 4, amb2)
    assert listing == A_3_4_T2_LISTING
    assert listing[0] == (1, 3, 5, 10)
    assert listing[-1] == (4, 6, 8, 10)
    assert enumerate_A(4, 1, Ambient(9, 2)) == [(5,)]
    with pytest.raises(DomainError):
        enumerate_A(5, 2, Ambient(8, 3))


def test_extreme_members():
    assert max_A(6, 4, 3) == (1, 4, 7, 16)
    assert min_A(6, 4, 3) == (7, 10, 13, 16)
    assert min_A(3, 7, 3) == (4, 7, 10, 13, 16, 19, 22)


def test_successor_examples():
    amb = Ambient(17, 3)
    assert successor_in_A((2, 6, 11, 14, 17), 4, 5, amb) == (2, 7, 10, 13, 17)
    assert successor_in_A(min_A(4, 5, 3), 4, 5, amb) is None
    amb2 = Ambient(9, 3)
    assert successor_in_A((1, 9), 5, 2, amb2) == (2, 9)
    with pytest.raises(DomainError):
        successor_in_A((2, 6, 11, 14, 16), 4, 5, amb)


def test_successor_and_predecessor_walk_the_whole_slice():
    for t, k, l in [(3, 5, 2), (2, 3, 4), (1, 4, 3), (4, 2, 3)]:
        amb = Ambient(k + t * (l - 1) + 1, t)
        listing = enumerate_A(k, l, amb)
        for prev, nxt in zip(listing, listing[1:]):
            assert successor_in_A(prev, k, l, amb) == nxt
            assert predecessor_in_A(nxt, k, l, amb) == prev
        assert successor_in_A(listing[-1], k, l, amb) is None
        assert predecessor_in_A(listing[0], k, l, amb) is None
        assert list(iter_A_ascending(k, l, amb)) == listing[::-1]


def test_rank_examples():
    amb = Ambient(16, 3)
    assert rank_in_A((4, 9, 13, 16), 6, 4, amb) == 73
    assert rank_in_A(max_A(6, 4, 3), 6, 4, amb) == 1
    assert rank_in_A(min_A(6, 4, 3), 6, 4, amb) == card_A(6, 4)


def test_rank_matches_oracle_positions():
    for t, k, l in [(1, 3, 4), (2, 4, 3), (3, 5, 2), (2, 3, 4), (4, 2, 2)]:
        amb = Ambient(k + t * (l - 1) + 1, t)
        listing = enumerate_A(k, l, amb)
        assert listing == oracle_enumerate_A(k, l, amb)
        for pos, u in enumerate(listing):
            assert rank_in_A(u, k, l, amb) == pos + 1
            assert oracle_rank(u, k, l, amb) == pos + 1


def test_segment_cards():
    amb = Ambient(16, 3)
    seg = SlexSegment(amb, 6, 4, (1, 4, 7, 16), (4, 9, 13, 16))
    assert segment_card(seg) == 73
    assert segment_card(SlexSegment(amb, 6, 4, (1, 4, 7, 16), (1, 4, 7, 16))) == 1
    amb2 = Ambient(13, 2)
    assert segment_card(SlexSegment(amb2, 5, 2, (1, 8), (3, 8))) == 3
    with pytest.raises(DomainError):
        SlexSegment(amb2, 5, 2, (3, 8), (1, 8))


def test_segment_members():
    amb = Ambient(13, 2)
    seg = SlexSegment(amb, 5, 2, (1, 8), (3, 8))
    assert seg.members() == [(1, 8), (2, 8), (3, 8)]


def test_take_smallest_segment():
    amb = Ambient(25, 3)
    seg = take_smallest_segment(3, 7, amb, 2)
    assert seg.first == (3, 7, 10, 13, 16, 19, 22)
    assert seg.last == (4, 7, 10, 13, 16, 19, 22)
    one = take_smallest_segment(5, 4, amb, 1)
    assert one.first == one.last == min_A(5, 4, 3)
    with pytest.raises(DomainError):
        take_smallest_segment(5, 2, Ambient(9, 3), 7)


def test_segment_ending_at_recovers_reference_block():
    amb = Ambient(25, 3)
    seg = segment_ending_at((3, 6, 11, 14, 17), 3, 4, 5, amb)
    assert seg.members() == [
        (3, 6, 10, 13, 17), (3, 6, 10, 14, 17), (3, 6, 11, 14, 17),
    ]
    assert segment_card(seg) == 3


def test_decompose_by_min():
    assert decompose_by_min(5, 2) == [(i, 1) for i in range(1, 7)]
    assert dict(decompose_by_min(6, 4))[1] == 28
    for k, l in [(3, 2), (6, 4), (2, 5), (8, 3)]:
        pairs = decompose_by_min(k, l)
        assert sum(b for _, b in pairs) == card_A(k, l)
    with pytest.raises(DomainError):
        decompose_by_min(4, 1)


def test_decompose_by_min_counts_match_enumeration():
    amb = Ambient(12, 2)
    listing = enumerate_A(4, 3, amb)
    for i, b in decompose_by_min(4, 3):
        assert b == sum(1 for u in listing if u[0] == i)


def test_binomial_decomposition_identity():
    # binom(k+l-1, l-1) splits by smallest index for every k, l up to 30
    for k in range(1, 31):
        for l in range(2, 31):
            assert sum(binom(k + l - 1 - i, l - 2) for i in range(1, k + 2)) == binom(
                k + l - 1, l - 1
            )
