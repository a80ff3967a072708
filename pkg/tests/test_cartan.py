import pytest

from qtchar import algebra
from qtchar.cartan import (
    CartanMatrix,
    cartan_from_json,
    named_cartan,
    validate_cartan,
)
from qtchar.errors import NotCartan, NotFiniteType, NotSymmetrizable, ParseError

DEPTH_TYPES = (
    [f"A{n}" for n in range(1, 7)]
    + [f"B{n}" for n in range(2, 5)]
    + [f"C{n}" for n in range(2, 5)]
    + ["D4", "G2", "F4"]
)


@pytest.mark.parametrize("name", DEPTH_TYPES)
def test_inverse_series_to_depth_60(name):
    alg = algebra(name)
    n = alg.cartan.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for r in range(-60, 3):
                total = 0
                for k in range(1, n + 1):
                    for e, c in alg.cartan.cz[i - 1][k - 1].items():
                        total += c * alg.tilde(k, j, r - e)
                assert total == (1 if (i == j and r == 0) else 0)


def test_symmetrizers():
    assert algebra("B2").cartan.r == [1, 2]
    assert algebra("C3").cartan.r == [2, 2, 1]
    assert algebra("G2").cartan.r == [1, 3]
    assert algebra("A3").cartan.r == [1, 1, 1]


def test_named_types_shapes():
    assert named_cartan("A1") == [[2]]
    assert named_cartan("B2") == [[2, -2], [-1, 2]]
    assert named_cartan("G2") == [[2, -3], [-1, 2]]
    d4 = named_cartan("D4")
    assert len(d4) == 4 and d4[3][1] == -1 and d4[3][2] == 0
    with pytest.raises(ParseError):
        named_cartan("H2")
    with pytest.raises(ParseError):
        named_cartan("B1")


def test_validation_errors():
    with pytest.raises(NotCartan):
        CartanMatrix([[1]])
    with pytest.raises(NotCartan):
        CartanMatrix([[2, 1], [-1, 2]])
    with pytest.raises(NotCartan):
        CartanMatrix([[2, 0], [-1, 2]])
    with pytest.raises(NotFiniteType):
        validate_cartan([[2, -2], [-2, 2]])  # affine
    with pytest.raises(NotFiniteType):
        validate_cartan([[2, -4], [-1, 2]])


def test_symmetrizable_consistency():
    # a 3-cycle with inconsistent ratios cannot be symmetrized
    with pytest.raises((NotSymmetrizable, NotFiniteType)):
        validate_cartan([[2, -1, -2], [-2, 2, -1], [-1, -2, 2]])


def test_json_inputs():
    assert cartan_from_json("b2").r == [1, 2]
    assert cartan_from_json({"type": "A2"}).n == 2
    assert cartan_from_json({"matrix": [[2]]}).n == 1
    with pytest.raises(ParseError):
        cartan_from_json({"rank": 2})
    with pytest.raises(ParseError):
        cartan_from_json(17)


def test_simply_laced_flag():
    assert algebra("A3").cartan.is_simply_laced()
    assert algebra("D4").cartan.is_simply_laced()
    assert not algebra("B2").cartan.is_simply_laced()
    assert not algebra("G2").cartan.is_simply_laced()


def test_components():
    cm = CartanMatrix([[2, 0], [0, 2]])
    assert cm.components() == [[1], [2]]
    assert CartanMatrix(named_cartan("A3")).components() == [[1, 2, 3]]
