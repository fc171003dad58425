import pytest

from approxring import DescriptiveSpace, from_rows, from_table, grid_add_mod2, grid_mul_min
from approxring.errors import ClosureError, NotAGridError, TableError
from approxring.optables import OpTable, from_function


def test_grid_rules_on_image(image16):
    add, mul = image16.ops["add"], image16.ops["mul"]
    assert add.apply("x01", "x10") == "x11"
    assert add.apply("x11", "x11") == "x00"
    assert add.apply("x23", "x31") == "x10"
    assert mul.apply("x23", "x31") == "x21"
    assert mul.apply("x01", "x10") == "x00"


def test_grid_needs_coords():
    X = DescriptiveSpace("ab", [(0,), (1,)])
    with pytest.raises(NotAGridError):
        grid_add_mod2(X)


def test_grid_closure():
    # (1,1) + (1,1) = (0,0) is not on this carrier
    X = DescriptiveSpace(["p", "q"], [(0,), (1,)], coords=[(0, 1), (1, 1)])
    with pytest.raises(ClosureError):
        grid_add_mod2(X)
    assert grid_mul_min(X).apply("p", "q") == "p"


def test_table_forms_agree():
    X = DescriptiveSpace("ab", [(0,), (1,)])
    t1 = from_rows(X, [["a", "b"], ["b", "a"]], "t")
    t2 = from_table(X, {("a", "a"): "a", ("a", "b"): "b", ("b", "a"): "b", ("b", "b"): "a"}, "t")
    t3 = from_function(X, lambda i, j: i ^ j, "t")
    assert t1 == t2 == t3
    assert t1.rows_by_label() == [["a", "b"], ["b", "a"]]


@pytest.mark.parametrize("entries", [
    [("a", "a", "a"), ("a", "b", "b"), ("b", "a", "b")],
    [("a", "a", "a"), ("a", "a", "b"), ("a", "b", "b"), ("b", "a", "b"), ("b", "b", "a")],
    [("a", "a", "z"), ("a", "b", "b"), ("b", "a", "b"), ("b", "b", "a")],
])
def test_bad_tables(entries):
    X = DescriptiveSpace("ab", [(0,), (1,)])
    with pytest.raises(TableError):
        from_table(X, entries)


def test_raw_table_bounds():
    X = DescriptiveSpace("ab", [(0,), (1,)])
    with pytest.raises(TableError):
        OpTable(X, ((0, 2), (1, 0)))
    with pytest.raises(TableError):
        from_rows(X, [["a", "b"]])
