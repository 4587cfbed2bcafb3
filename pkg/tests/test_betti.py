import pytest

from tspread import (
    Ambient,
    DomainError,
    TIdeal,
    TMonomialSet,
    betti_table,
    borel_closure_degree,
    corner_sequence,
    extremal_value,
    graded_betti,
    ideal_from_borel_generators,
    is_extremal,
    is_strongly_stable,
    m2_generator_list,
    minimalize,
    render_betti_table,
    shadow,
)
from tspread.oracle import oracle_is_extremal

from reference_data import (
    FOUR_CORNER_BETTI_ROWS,
    FOUR_CORNER_BETTI_TOT,
    FOUR_CORNER_BOREL_GENERATORS,
    FOUR_CORNER_GENERATORS,
    FOUR_CORNER_POSITIONS,
    FOUR_CORNER_VALUES,
)

AMB25 = Ambient(25, 3)


@pytest.fixture(scope="module")
def reference_ideal():
    ideal = TIdeal.of(AMB25, FOUR_CORNER_GENERATORS)
    ideal.validate()
    return ideal


def test_tideal_construction_and_json(reference_ideal):
    assert reference_ideal.degrees == (2, 4, 5, 7)
    assert len(reference_ideal.all_generators()) == 23
    back = TIdeal.from_json(reference_ideal.to_json())
    assert back == reference_ideal
    with pytest.raises(DomainError):
        TIdeal.of(AMB25, {})
    with pytest.raises(DomainError):
        TIdeal.from_json({"n": 5, "generators": {}})


def test_tideal_validate_catches_violations():
    not_stable = TIdeal.of(Ambient(8, 2), {2: [(2, 8)]})
    with pytest.raises(DomainError):
        not_stable.validate()
    redundant = TIdeal.of(Ambient(9, 2), {2: [(1, 4)], 3: [(1, 4, 7)]})
    with pytest.raises(DomainError):
        redundant.validate()


def test_graded_betti_reference_values(reference_ideal):
    col0 = sum(
        graded_betti(reference_ideal, 0, l) for l in reference_ideal.degrees
    )
    assert col0 == 23
    assert graded_betti(reference_ideal, 6, 2) == 2
    assert graded_betti(reference_ideal, 3, 5) == 13


def test_graded_betti_principal_ideal():
    one = TIdeal.of(Ambient(4, 3), {1: [(1,)]})
    assert graded_betti(one, 0, 1) == 1
    assert all(graded_betti(one, k, 1) == 0 for k in range(1, 5))
    assert all(graded_betti(one, k, 2) == 0 for k in range(0, 5))


def test_betti_table_matches_reference(reference_ideal):
    table = betti_table(reference_ideal)
    assert table.totals() == FOUR_CORNER_BETTI_TOT
    for l, row in FOUR_CORNER_BETTI_ROWS.items():
        for k, want in enumerate(row):
            assert table.value(k, l) == want
    assert table.max_k == 6
    assert table.degrees == (2, 4, 5, 7)


def test_betti_table_single_generator():
    table = betti_table(TIdeal.of(Ambient(9, 2), {2: [(1, 4)]}))
    assert table.as_dict() == {(0, 2): 1, (1, 2): 1}


def test_render_matches_golden(reference_ideal):
    import pathlib

    golden = pathlib.Path(__file__).with_name("golden_betti_table.txt")
    assert render_betti_table(betti_table(reference_ideal)) + "\n" == golden.read_text()


def test_two_corner_feasible_ideal_table():
    # corners (5,2) value 1 and (3,4) value 10 in 13 variables, t = 2
    from tspread import CornerSpec, construct_ideal

    report = construct_ideal(CornerSpec.of(13, 2, [(5, 2, 1), (3, 4, 10)]))
    table = betti_table(report.ideal)
    assert table.value(5, 2) == 1
    assert table.value(3, 4) == 10
    data = corner_sequence(report.ideal)
    assert data.corners == ((5, 2), (3, 4))
    assert data.values == (1, 10)


def test_is_extremal_reference_positions(reference_ideal):
    assert is_extremal(reference_ideal, 6, 2)
    assert not is_extremal(reference_ideal, 6, 3)
    assert is_extremal(reference_ideal, 3, 7)
    assert extremal_value(reference_ideal, 3, 7) == 2
    assert not is_extremal(reference_ideal, 7, 2)
    assert not is_extremal(reference_ideal, 5, 2)


def test_is_extremal_agrees_with_definition_scan(reference_ideal):
    for k in range(0, 8):
        for l in range(2, 9):
            assert is_extremal(reference_ideal, k, l) == oracle_is_extremal(
                reference_ideal, k, l
            )


def test_extremal_value_examples(reference_ideal):
    assert extremal_value(reference_ideal, 4, 5) == 3
    assert extremal_value(reference_ideal, 5, 4) == 1
    with pytest.raises(DomainError):
        extremal_value(reference_ideal, 6, 3)


def test_extremal_value_equals_betti_at_corners(reference_ideal):
    data = corner_sequence(reference_ideal)
    for (k, l), v in zip(data.corners, data.values):
        assert graded_betti(reference_ideal, k, l) == v
        assert extremal_value(reference_ideal, k, l) == v


def test_corner_sequence_reference(reference_ideal):
    data = corner_sequence(reference_ideal)
    assert data.corners == FOUR_CORNER_POSITIONS
    assert data.values == FOUR_CORNER_VALUES


def test_corner_sequence_single_degree():
    ideal = ideal_from_borel_generators(Ambient(9, 2), [(3, 7)])
    data = corner_sequence(ideal)
    assert len(data.corners) == 1
    assert data.corners[0] == (7 - 2 - 1, 2)


def test_ideal_from_borel_generators_reference():
    ideal = ideal_from_borel_generators(AMB25, FOUR_CORNER_BOREL_GENERATORS)
    got = {d: list(m) for d, m in ideal.graded_gens}
    want = {d: sorted(us) for d, us in FOUR_CORNER_GENERATORS.items()}
    assert got == want


def test_minimalize_reference_chain(reference_ideal):
    comps = [reference_ideal.component(d) for d in range(2, 8)]
    rebuilt = minimalize(comps)
    assert rebuilt == reference_ideal


def test_minimalize_single_degree_is_identity():
    amb = Ambient(10, 2)
    comp = borel_closure_degree(TMonomialSet.of(amb, 2, [(3, 8)]))
    ideal = minimalize([comp])
    assert ideal.graded_gens == ((2, comp),)


def test_minimalize_agrees_with_divisibility():
    # minimal in degree d+1 means: no way to drop one index and land in the
    # lower component
    amb = Ambient(11, 2)
    low = borel_closure_degree(TMonomialSet.of(amb, 2, [(2, 7), (4, 9)]))
    high = shadow(low).union(
        borel_closure_degree(TMonomialSet.of(amb, 3, [(3, 6, 11)]))
    )
    ideal = minimalize([low, high])
    low_set = set(low.elements)
    for u in high:
        divisible = any(
            tuple(u[:i] + u[i + 1:]) in low_set for i in range(len(u))
        )
        assert (u in ideal.generators(3)) == (not divisible)


def test_minimalize_rejects_bad_chains():
    amb = Ambient(10, 2)
    low = borel_closure_degree(TMonomialSet.of(amb, 2, [(3, 8)]))
    with pytest.raises(DomainError):
        minimalize([low, TMonomialSet.of(amb, 3, [(1, 3, 5)])])  # misses shadow
    with pytest.raises(DomainError):
        minimalize([low, TMonomialSet.of(amb, 4, [])])  # degree jump
    with pytest.raises(DomainError):
        minimalize([TMonomialSet.of(amb, 2, [(2, 8)])])  # not strongly stable


def test_components_are_strongly_stable(reference_ideal):
    for d in range(2, 8):
        assert is_strongly_stable(reference_ideal.component(d))


def test_m2_generator_list():
    ideal = TIdeal.of(Ambient(9, 2), {2: [(1, 4), (1, 5)]})
    assert m2_generator_list(ideal) == "x_1*x_4, x_1*x_5"
