import pytest

from pencilforge.groups import build_group
from pencilforge.molien import molien


def test_g12_to_14():
    assert molien(build_group("G12"), 14).as_ints() == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]


def test_h_to_8():
    assert molien(build_group("H"), 8).as_ints() == [1, 0, 1, 0, 5, 0, 6, 0, 15]


def test_g8_to_6():
    assert molien(build_group("G8"), 6).as_ints() == [1, 0, 1, 0, 1, 0, 1]


@pytest.mark.parametrize("name", ["H", "G6", "G8"])
def test_gl4_and_true_classes_agree(name):
    G = build_group(name)
    assert molien(G, 14).as_ints() == molien(G, 14, use_gl4_classes=False).as_ints()


def test_str():
    text = str(molien(build_group("G6"), 6))
    assert text == "1 + t^2 + t^4 + 2*t^6 + O(t^7)"
