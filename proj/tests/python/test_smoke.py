import pytest

import subcount


def test_count_and_order():
    assert subcount.count("Q(8)") == 6
    assert subcount.count("A(5)") == 59
    assert subcount.count("Z(2) x Q(8)") == 19
    assert subcount.order("Z(4) x D(8)") == 32


def test_lattice_by_order():
    assert subcount.lattice("D(8)") == {1: 1, 2: 5, 4: 3, 8: 1}


def test_abelian_classes():
    assert subcount.abelian_classes(4) == ["Z_{p q}", "Z_{p^3}"]
    assert subcount.abelian_class_count(16) == 9
    assert subcount.nonabelian_class_count(10) == 7


def test_sequence():
    assert subcount.sequence() == [
        1, 1, 1, 2, 2, 5, 1, 7, 2, 12, 4, 11, 1, 17, 8, 22, 3, 22, 5,
    ]
    assert subcount.sequence(5) == [1, 1, 1, 2, 2]


def test_bound_and_candidates():
    assert subcount.bound("2*3") == (6, "two-prime lower bound")
    assert subcount.bound("2*3*5*7") == (20, "four-or-more-prime floor")
    families = subcount.candidate_families(19)
    assert len(families) == 24
    assert any(f.startswith("pq with q <= 13") for f in families)


def test_verify_tables():
    lines = subcount.verify_tables()
    assert lines
    assert all(line.endswith("PASS") for line in lines)


def test_cli_roundtrip():
    assert subcount.run(["count", "A(5)"]) == (0, "59\n", "")
    code, out, _ = subcount.run(["sequence"])
    assert code == 0
    assert out.endswith("22, 5\n")


def test_errors():
    with pytest.raises(subcount.ParseError):
        subcount.count("Z(")
    with pytest.raises(ValueError):  # ParseError derives from ValueError
        subcount.count("Foo(3)")
    with pytest.raises(subcount.SizeError):
        subcount.count("Z(4096)")
    assert subcount.count("Z(4096)", max_order=4096) == 13
    with pytest.raises(subcount.PresentationError):
        subcount.count("D(7)")
    with pytest.raises(subcount.ArgumentError):
        subcount.abelian_classes(0)
