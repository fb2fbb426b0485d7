import pytest
from hypothesis import given
from hypothesis import strategies as st

from tangled.young import (
    EMPTY,
    Label,
    StandardTableau,
    label,
    rsk_extract,
    rsk_insert,
    shape_corners,
    tableau_place,
    tableau_remove,
)

from conftest import all_tableaux, primed_alphabet


def T(*rows):
    return StandardTableau.from_json(rows)


def test_label_order():
    assert label(1) < label("1'") < label(2) < label("2'") < label(3)
    assert str(Label(4, True)) == "4'"
    assert label("10'") == Label(10, True)
    with pytest.raises(ValueError):
        label("x")


@pytest.mark.parametrize("shape, expected", [
    ((), []),
    ((2, 1), [(1, (1, 1)), (2, (2,))]),
    ((3, 3), [(2, (3, 2))]),
])
def test_shape_corners(shape, expected):
    assert shape_corners(shape) == expected


def test_tableau_rejects_non_standard():
    with pytest.raises(ValueError):
        T(["2", "1"])
    with pytest.raises(ValueError):
        T(["2", "3"], ["1"])
    with pytest.raises(ValueError):
        T(["1", "1"])


@pytest.mark.parametrize("t, x, expected", [
    (EMPTY, "3", [["3"]]),
    (T(["1", "2"]), "3", [["1", "2", "3"]]),
    (T(["1", "3"]), "2", [["1", "2"], ["3"]]),
    (T(["1", "2'"]), "2", [["1", "2"], ["2'"]]),
])
def test_rsk_insert_examples(t, x, expected):
    out = rsk_insert(t, label(x))
    assert out.to_json() == expected
    assert rsk_extract(out, t.shape) == (t, label(x))


def test_rsk_insert_rejects_duplicate():
    with pytest.raises(ValueError):
        rsk_insert(T(["1", "2"]), label(2))


@pytest.mark.parametrize("t, target, expected", [
    (T(["5"]), (), (EMPTY, "5")),
    (T(["1", "3"]), (1,), (T(["1"]), "3")),
    (T(["1", "2"], ["3"]), (2,), (T(["1", "3"]), "2")),
])
def test_rsk_extract_examples(t, target, expected):
    assert rsk_extract(t, target) == (expected[0], label(expected[1]))


def test_rsk_extract_rejects_bad_target():
    with pytest.raises(ValueError):
        rsk_extract(T(["1", "2"], ["3"]), (1,))
    with pytest.raises(ValueError):
        rsk_extract(T(["1", "2"]), (1, 1))


@pytest.mark.parametrize("t, x, at, expected", [
    (EMPTY, "1", (1,), [["1"]]),
    (T(["1"]), "2'", (2,), [["1", "2'"]]),
    (T(["1", "2"]), "3", (2, 1), [["1", "2"], ["3"]]),
])
def test_tableau_place(t, x, at, expected):
    assert tableau_place(t, label(x), at).to_json() == expected


def test_tableau_place_rejects_violations():
    with pytest.raises(ValueError):
        tableau_place(T(["2"]), label(1), (2,))
    with pytest.raises(ValueError):
        tableau_place(T(["1"]), label(2), (3,))


def test_tableau_remove():
    assert tableau_remove(T(["1"]), label(1)) == EMPTY
    assert tableau_remove(T(["1", "2"], ["3"]), label(3)) == T(["1", "2"])
    with pytest.raises(ValueError):
        tableau_remove(T(["1", "2"], ["3"]), label(1))
    with pytest.raises(ValueError):
        tableau_remove(T(["1", "2"]), label(5))


def test_insert_extract_exhaustive_small():
    alphabet = primed_alphabet(3)
    checked = 0
    for rows in all_tableaux(4, alphabet):
        t = StandardTableau.from_json([[str(x) for x in r] for r in rows])
        for x in alphabet:
            if x in t:
                continue
            grown = rsk_insert(t, x)
            assert len(grown) == len(t) + 1
            assert rsk_extract(grown, t.shape) == (t, x)
            checked += 1
        for _, mu in shape_corners(t.shape):
            smaller, j = rsk_extract(t, mu)
            assert smaller.shape == mu
            assert rsk_insert(smaller, j) == t
    assert checked > 500


labels = st.builds(Label, st.integers(1, 6), st.booleans())


@given(st.lists(labels, unique=True, max_size=10))
def test_insert_sequence_then_unwind(xs):
    t = EMPTY
    history = []
    for x in xs:
        history.append(t)
        t = rsk_insert(t, x)
    for x, prev in zip(reversed(xs), reversed(history)):
        t, y = rsk_extract(t, prev.shape)
        assert (t, y) == (prev, x)
