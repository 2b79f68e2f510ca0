import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jmfit import DatasetFormatError, FailureDataset, builtin_dataset, load_dataset, prefix, save_dataset


def test_builtin_lengths():
    assert len(builtin_dataset("ntds")) == 31
    assert len(builtin_dataset("musa1")) == 17
    assert len(builtin_dataset("musa2")) == 15
    assert len(builtin_dataset("musa3")) == 163


def test_ntds_values(ntds):
    assert list(ntds.intervals[:3]) == [9, 12, 11]
    # 25th and 26th recorded intervals of the development stage
    assert ntds.intervals[24] == 2
    assert ntds.intervals[25] == 1
    assert ntds.intervals[-1] == 135
    assert ntds.unit == "day"


def test_musa2_values(musa2):
    assert list(musa2.intervals) == [10, 9, 13, 11, 15, 12, 18, 15, 22, 25, 19, 30, 32, 25, 40]


def test_musa3_endpoints(musa3):
    assert musa3.intervals[0] == 320
    assert musa3.intervals[-1] == 17280
    assert musa3.unit == "second"


def test_unknown_name_lists_valid():
    with pytest.raises(KeyError, match="musa1"):
        builtin_dataset("nope")


def test_intervals_immutable(ntds):
    with pytest.raises(ValueError):
        ntds.intervals[0] = 1.0


@pytest.mark.parametrize(
    "values",
    [[], [0.0], [-1.0, 2.0], [1.0, float("nan")]],
)
def test_invalid_intervals_rejected(values):
    with pytest.raises((DatasetFormatError, ValueError)):
        FailureDataset("bad", np.array(values, dtype=float))


def test_prefix_basics(ntds):
    seg = prefix(ntds, 26)
    assert len(seg) == 26
    assert seg.intervals[-1] == 1
    assert seg.name == "ntds[:26]"
    assert seg.unit == "day"
    assert prefix(ntds, len(ntds)) is ntds
    assert list(prefix(ntds, 3).intervals) == [9, 12, 11]


def test_prefix_out_of_range(ntds):
    with pytest.raises(ValueError):
        prefix(ntds, 0)
    with pytest.raises(ValueError):
        prefix(ntds, 32)


@given(k=st.integers(1, 31), j=st.integers(1, 31))
def test_prefix_composes(k, j):
    ntds = builtin_dataset("ntds")
    if j > k:
        k, j = j, k
    once = prefix(ntds, j)
    twice = prefix(prefix(ntds, k), j)
    assert np.array_equal(once.intervals, twice.intervals)


def test_load_plain(tmp_path):
    p = tmp_path / "data.txt"
    p.write_text("9\n12\n11\n")
    ds = load_dataset(p, "plain")
    assert list(ds.intervals) == [9, 12, 11]
    assert ds.unit == "unspecified"


def test_load_plain_unit_header_and_comments(tmp_path):
    p = tmp_path / "data.txt"
    p.write_text("# unit: day\n# a comment\n1.5\n\n2.5\n")
    ds = load_dataset(p)
    assert ds.unit == "day"
    assert list(ds.intervals) == [1.5, 2.5]


def test_load_plain_nonpositive_reports_line(tmp_path):
    p = tmp_path / "data.txt"
    p.write_text("9\n0\n11\n")
    with pytest.raises(DatasetFormatError, match=":2:"):
        load_dataset(p)


def test_load_empty_file(tmp_path):
    p = tmp_path / "data.txt"
    p.write_text("# unit: day\n")
    with pytest.raises(DatasetFormatError, match="no intervals"):
        load_dataset(p)


def test_load_csv(tmp_path):
    p = tmp_path / "data.csv"
    p.write_text("interval\n1.5\n2.5\n")
    ds = load_dataset(p, "csv")
    assert list(ds.intervals) == [1.5, 2.5]


def test_load_csv_missing_column(tmp_path):
    p = tmp_path / "data.csv"
    p.write_text("value\n1.5\n")
    with pytest.raises(DatasetFormatError, match="interval"):
        load_dataset(p, "csv")


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.integers(1, 10**12).map(lambda n: n / 10**6),
        min_size=1,
        max_size=40,
    )
)
def test_save_load_round_trip(values):
    import tempfile

    ds = FailureDataset("rt", np.array(values, dtype=float))
    with tempfile.TemporaryDirectory() as tmp:
        path = f"{tmp}/rt.txt"
        save_dataset(ds, path)
        back = load_dataset(path)
    assert np.array_equal(back.intervals, ds.intervals)


def test_save_load_round_trip_concrete(tmp_path):
    rng = np.random.default_rng(7)
    values = np.round(rng.uniform(0.000001, 1e6, size=60), 6)
    values = values[values > 0]
    ds = FailureDataset("rt", values, unit="hour")
    p = tmp_path / "rt.txt"
    save_dataset(ds, p)
    back = load_dataset(p)
    assert back.unit == "hour"
    assert np.array_equal(back.intervals, ds.intervals)
