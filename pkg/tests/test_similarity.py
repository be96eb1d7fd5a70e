import io
import random
from datetime import date, timedelta

import pytest
from hypothesis import assume, given, settings, strategies as st

from helpers import index_from_counts, naive_cosine, naive_pearson
from newscorr.errors import LengthMismatch, OutOfRange, TooShort, UnknownPerson
from newscorr.similarity import (
    correlation_over_time,
    cosine,
    pearson,
    read_matrix_csv,
    similarity_at,
    similarity_matrix,
    write_matrix_csv,
    write_series_csv,
)
from newscorr.timeseries import WindowSpec

D0 = date(2017, 1, 1)

int_vectors = st.integers(2, 40).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 1000), min_size=n, max_size=n),
        st.lists(st.integers(0, 1000), min_size=n, max_size=n),
    )
)


def test_pearson_perfect_self_correlation():
    assert pearson([1, 2, 3], [1, 2, 3]) == 1.0


def test_pearson_exact_anticorrelation():
    assert pearson([1, 2, 3], [3, 2, 1]) == -1.0


def test_pearson_zero_variance_undefined():
    assert pearson([5, 5, 5], [1, 2, 3]) is None
    assert pearson([1, 2, 3], [7, 7, 7]) is None


def test_pearson_frozen_oracle_value():
    # naive_pearson([1,2,3,4], [2,4,7,8]) == 0.9844951849708403
    r = pearson([1, 2, 3, 4], [2, 4, 7, 8])
    assert abs(r - 0.9844951849708403) < 1e-12
    assert abs(r - naive_pearson([1, 2, 3, 4], [2, 4, 7, 8])) < 1e-12


def test_pearson_errors():
    with pytest.raises(LengthMismatch):
        pearson([1, 2], [1, 2, 3])
    with pytest.raises(TooShort):
        pearson([1], [2])


def test_cosine_examples():
    assert cosine([1, 2], [1, 2]) == 1.0
    assert cosine([1, 0], [0, 1]) == 0.0
    assert cosine([1, 2], [2, 4]) == 1.0
    assert cosine([0, 0], [1, 2]) is None
    with pytest.raises(LengthMismatch):
        cosine([1], [1, 2])


@given(pair=int_vectors)
def test_pearson_matches_naive_and_in_range(pair):
    x, y = pair
    engine = pearson(x, y)
    oracle = naive_pearson(x, y)
    if oracle is None:
        assert engine is None
    else:
        assert abs(engine - oracle) <= 1e-12
        assert -1.0 <= engine <= 1.0


@given(pair=int_vectors)
def test_pearson_symmetric(pair):
    x, y = pair
    assert pearson(x, y) == pearson(y, x)


@given(pair=int_vectors)
def test_cosine_matches_naive(pair):
    x, y = pair
    engine = cosine(x, y)
    oracle = naive_cosine(x, y)
    if oracle is None:
        assert engine is None
    else:
        assert abs(engine - oracle) <= 1e-12


@given(
    pair=int_vectors,
    alpha=st.floats(0.001, 100.0),
    beta=st.floats(-1000.0, 1000.0),
)
def test_pearson_shift_scale_invariance(pair, alpha, beta):
    x, y = pair
    base = pearson(x, y)
    assume(base is not None)
    shifted = pearson([alpha * v + beta for v in x], y)
    assert shifted is not None
    assert abs(shifted - base) <= 1e-12


@given(pair=int_vectors, alpha=st.floats(0.001, 100.0))
def test_cosine_scale_but_not_shift_invariant(pair, alpha):
    x, y = pair
    base = cosine(x, y)
    assume(base is not None)
    scaled = cosine([alpha * v for v in x], y)
    assert abs(scaled - base) <= 1e-12


def test_shift_changes_cosine_but_not_pearson():
    x, y = [3, 0, 1], [3, 0, 1]
    assert cosine(x, y) == 1.0
    shifted = [v + 10 for v in x]
    assert abs(cosine(shifted, y) - 1.0) > 0.01
    assert abs(pearson(shifted, y) - pearson(x, y)) <= 1e-12


def test_similarity_at_self_and_symmetry():
    index = index_from_counts({"A": [1, 2, 3, 4], "B": [4, 1, 1, 2]})
    w = WindowSpec(end_date=D0 + timedelta(days=3), n=4)
    assert similarity_at(index, "A", "A", w).value == 1.0
    ab = similarity_at(index, "A", "B", w)
    ba = similarity_at(index, "B", "A", w)
    assert ab.value == ba.value
    assert ab.method == "pearson" and ab.window == w


def test_similarity_at_disjoint_spikes_negative():
    index = index_from_counts({"A": [9, 0, 0, 0], "B": [0, 0, 0, 9]})
    w = WindowSpec(end_date=D0 + timedelta(days=3), n=4)
    value = similarity_at(index, "A", "B", w).value
    oracle = naive_pearson([9, 0, 0, 0], [0, 0, 0, 9])
    assert value < 0
    assert abs(value - oracle) <= 1e-12


def test_similarity_at_errors():
    index = index_from_counts({"A": [1, 2, 3]})
    w = WindowSpec(end_date=D0 + timedelta(days=2), n=3)
    with pytest.raises(UnknownPerson):
        similarity_at(index, "A", "Nobody", w)
    with pytest.raises(OutOfRange):
        similarity_at(index, "A", "A", WindowSpec(end_date=D0 + timedelta(days=9), n=3))


def test_correlation_constant_partner_all_undefined():
    index = index_from_counts({"A": [1, 2, 3, 4, 5], "B": [2, 2, 2, 2, 2]})
    series = correlation_over_time(index, "A", "B", n=3)
    assert [v for _, v in series.points] == [None, None, None]


def test_correlation_self_all_ones():
    index = index_from_counts({"A": [1, 2, 3, 4, 5]})
    series = correlation_over_time(index, "A", "A", n=3)
    assert [v for _, v in series.points] == [1.0, 1.0, 1.0]
    assert [d for d, _ in series.points] == [
        D0 + timedelta(days=2),
        D0 + timedelta(days=3),
        D0 + timedelta(days=4),
    ]


def test_correlation_undefined_points_are_gaps_not_zeros():
    # B constant in the first window only
    index = index_from_counts({"A": [1, 2, 3, 4], "B": [2, 2, 2, 5]})
    series = correlation_over_time(index, "A", "B", n=3)
    values = [v for _, v in series.points]
    assert values[0] is None
    assert values[1] is not None


def test_correlation_window_must_fit():
    index = index_from_counts({"A": [1, 2, 3]})
    with pytest.raises(TooShort):
        correlation_over_time(index, "A", "A", n=4)
    with pytest.raises(TooShort):
        correlation_over_time(index, "A", "A", n=1)  # pearson needs n >= 2
    series = correlation_over_time(index, "A", "A", n=1, method="cosine")
    assert len(series.points) == 3


def test_correlation_unknown_person():
    index = index_from_counts({"A": [1, 2, 3]})
    with pytest.raises(UnknownPerson):
        correlation_over_time(index, "A", "Nobody", n=2)


@settings(deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.sampled_from([7, 30]))
def test_rolling_equals_per_window_recomputation(seed, n):
    rng = random.Random(seed)
    days = 80
    counts = {
        "A": [rng.randint(0, 20) for _ in range(days)],
        "B": [rng.randint(0, 20) for _ in range(days)],
    }
    index = index_from_counts(counts)
    series = correlation_over_time(index, "A", "B", n=n)
    for end_date, value in series.points:
        i = (end_date - D0).days
        x = counts["A"][i - n + 1 : i + 1]
        y = counts["B"][i - n + 1 : i + 1]
        oracle = naive_pearson(x, y)
        if oracle is None:
            assert value is None
        else:
            assert abs(value - oracle) <= 1e-9


def test_rolling_cosine_matches_naive():
    rng = random.Random(5)
    counts = {
        "A": [rng.randint(0, 5) for _ in range(40)],
        "B": [rng.randint(0, 5) for _ in range(40)],
    }
    index = index_from_counts(counts)
    series = correlation_over_time(index, "A", "B", n=7, method="cosine")
    for end_date, value in series.points:
        i = (end_date - D0).days
        oracle = naive_cosine(
            counts["A"][i - 6 : i + 1], counts["B"][i - 6 : i + 1]
        )
        if oracle is None:
            assert value is None
        else:
            assert abs(value - oracle) <= 1e-9


def test_matrix_single_person():
    index = index_from_counts({"A": [1, 2, 3]})
    w = WindowSpec(end_date=D0 + timedelta(days=2), n=3)
    m = similarity_matrix(index, ["A"], w)
    assert m.values == ((1.0,),)


def test_matrix_symmetric_and_diagonal():
    rng = random.Random(17)
    counts = {p: [rng.randint(0, 9) for _ in range(10)] for p in "ABCDE"}
    counts["F"] = [4] * 10  # constant -> undefined everywhere
    index = index_from_counts(counts)
    w = WindowSpec(end_date=D0 + timedelta(days=9), n=10)
    m = similarity_matrix(index, list("ABCDEF"), w)
    k = len(m.persons)
    for i in range(k):
        for j in range(k):
            assert m.values[i][j] == m.values[j][i]
    for i, person in enumerate(m.persons):
        expected = None if person == "F" else 1.0
        assert m.values[i][i] == expected
    for row in m.values:
        for v in row:
            if v is not None:
                assert -1.0 <= v <= 1.0


def test_matrix_against_naive_oracle():
    rng = random.Random(3)
    counts = {p: [rng.randint(0, 9) for _ in range(12)] for p in "XYZ"}
    index = index_from_counts(counts)
    w = WindowSpec(end_date=D0 + timedelta(days=11), n=12)
    m = similarity_matrix(index, ["X", "Y", "Z"], w)
    for i, a in enumerate(m.persons):
        for j, b in enumerate(m.persons):
            if i == j:
                continue
            oracle = naive_pearson(counts[a], counts[b])
            assert abs(m.values[i][j] - oracle) <= 1e-9


def test_matrix_permutation_equivariance():
    rng = random.Random(11)
    counts = {p: [rng.randint(0, 9) for _ in range(8)] for p in "ABC"}
    index = index_from_counts(counts)
    w = WindowSpec(end_date=D0 + timedelta(days=7), n=8)
    m1 = similarity_matrix(index, ["A", "B", "C"], w)
    m2 = similarity_matrix(index, ["C", "A", "B"], w)
    perm = [m1.persons.index(p) for p in m2.persons]
    for i in range(3):
        for j in range(3):
            assert m2.values[i][j] == m1.values[perm[i]][perm[j]]


def test_matrix_duplicate_person_rejected():
    index = index_from_counts({"A": [1, 2, 3]})
    w = WindowSpec(end_date=D0 + timedelta(days=2), n=3)
    with pytest.raises(ValueError):
        similarity_matrix(index, ["A", "A"], w)


def test_matrix_cosine_method():
    index = index_from_counts({"A": [1, 2], "B": [2, 4], "Z": [0, 0]})
    w = WindowSpec(end_date=D0 + timedelta(days=1), n=2, method="cosine")
    m = similarity_matrix(index, ["A", "B", "Z"], w)
    assert m.values[0][1] == 1.0  # collinear
    assert m.values[2][2] is None  # all-zero window
    assert m.values[0][2] is None


def test_matrix_csv_round_trip():
    index = index_from_counts({"A": [1, 2, 3], "B": [3, 1, 2], "C": [2, 2, 2]})
    w = WindowSpec(end_date=D0 + timedelta(days=2), n=3)
    m = similarity_matrix(index, ["A", "B", "C"], w)
    buf = io.StringIO()
    write_matrix_csv(m, buf)
    text = buf.getvalue()
    parsed = read_matrix_csv(io.StringIO(text))
    assert parsed.persons == m.persons
    rounded = m.rounded(2)
    assert parsed.values == rounded.values
    second = io.StringIO()
    write_matrix_csv(parsed, second)
    assert second.getvalue() == text


def test_series_csv_gaps_empty():
    index = index_from_counts({"A": [1, 2, 3, 4], "B": [2, 2, 2, 5]})
    series = correlation_over_time(index, "A", "B", n=3)
    buf = io.StringIO()
    write_series_csv(series, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "end_date,value"
    assert lines[1] == "2017-01-03,"  # UNDEFINED -> empty, not 0
    assert lines[2].startswith("2017-01-04,")
    assert lines[2] != "2017-01-04,"
