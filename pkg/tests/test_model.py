import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakbcc.model import (
    Algebra,
    ParseError,
    fixture_names,
    load_fixture,
    parse_table,
    product,
    read_table,
    relabel,
    right_power,
    serialize,
    write_table,
)


def test_minimal_table_without_header():
    a = parse_table("n=1\n0\n")
    assert a.order == 1 and a.table == ((0,),)


def test_header_name_labels_and_comments():
    text = "bcc v1  # header\nname=demo\nlabels=0,a\nn=2\n0 0\n1 0  # row\n"
    a = parse_table(text)
    assert (a.name, a.labels, a.table) == ("demo", ("0", "a"), ((0, 0), (1, 0)))
    assert a.label(1) == "a"
    assert parse_table(serialize(a)) == a


@pytest.mark.parametrize(
    "text, line",
    [
        ("n=2\n0 0\n1\n", 3),
        ("n=2\n0 0\n1 2\n", 3),
        ("n=2\n0 0\n1 x\n", 3),
        ("n=2\n0 0\n1 0\n0 0\n", 4),
        ("bcc v2\nn=1\n0\n", 1),
        ("0 0\n", 1),
        ("labels=0,0\nn=2\n0 0\n1 0\n", 1),
        ("n=0\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_table(text)
    assert exc.value.line == line


def test_short_table_and_missing_order():
    with pytest.raises(ParseError):
        parse_table("n=3\n0 0 0\n")
    with pytest.raises(ParseError):
        parse_table("# nothing\n")


def test_algebra_validation():
    with pytest.raises(ValueError):
        Algebra.from_rows([[0, 1], [1]])
    with pytest.raises(ValueError):
        Algebra.from_rows([[0, 5], [1, 0]])


def test_product_and_powers():
    a = load_fixture("EX31")
    assert product(a, 4, 2) == 3
    with pytest.raises(IndexError):
        product(a, 5, 0)
    # x y^0 = x, x y^2 = (xy)y
    assert right_power(a, 4, 1, 0) == 4
    assert right_power(a, 4, 1, 2) == a(a(4, 1), 1)


def test_array_view():
    a = load_fixture("EX28")
    arr = a.array
    assert arr.shape == (6, 6) and arr.dtype.kind == "i"
    assert np.all(np.diag(arr) == 0) and np.array_equal(arr[:, 0], np.arange(6))


def test_read_uses_file_stem(tmp_path):
    p = tmp_path / "nameless.bcc"
    p.write_text("n=2\n0 0\n1 0\n")
    assert read_table(p).name == "nameless"
    a = load_fixture("E77")
    write_table(a, tmp_path / "x.bcc")
    assert read_table(tmp_path / "x.bcc") == a


def test_every_fixture_loads():
    for name in fixture_names():
        a = load_fixture(name)
        assert a.name == name
    with pytest.raises(KeyError):
        load_fixture("NOPE")


tables = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(tables)
def test_serialize_round_trip(rows):
    a = Algebra.from_rows(rows)
    assert parse_table(serialize(a)) == a


@settings(max_examples=50)
@given(st.sampled_from(fixture_names()), st.randoms(use_true_random=False))
def test_relabel_is_a_homomorphism(name, rnd):
    a = load_fixture(name)
    rest = list(range(1, a.order))
    rnd.shuffle(rest)
    perm = [0] + rest
    b = relabel(a, perm)
    for x in a.elements:
        for y in a.elements:
            assert b(perm[x], perm[y]) == perm[a(x, y)]
    if a.labels:
        assert all(b.labels[perm[x]] == a.labels[x] for x in a.elements)
