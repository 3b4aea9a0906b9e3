import pytest

from leafvol.errors import NotAHilbertSeries, ParseError
from leafvol.hilbert import (
    HilbertSeries,
    HironakaData,
    cm_pole_check,
    from_hironaka,
    from_molien,
    from_rational_function,
)
from leafvol.molien import GroupElement, enumerate_group
from leafvol.polyrat import RationalFunction

from oracles import geometric_product_series


def rf(num, factors):
    return RationalFunction.from_factored(num, factors)


def test_from_hironaka_examples():
    assert from_hironaka(HironakaData((1, 1, 1), (0,))).function == rf([1], [(1, 3)])
    hopf = from_hironaka(HironakaData((2, 2, 2), (0, 2)))
    assert hopf.function == rf([1, 0, 1], [(2, 3)])
    assert hopf.source == "hironaka"
    assert from_hironaka(HironakaData((2, 4), (0,))).function == rf([1], [(2, 1), (4, 1)])


def test_from_hironaka_keeps_factored_denominator():
    H = from_hironaka(HironakaData((2, 3, 3), (0, 1, 5)))
    assert H.function.factored_denominator is not None
    assert H.coefficients(40) == geometric_product_series([1, 1, 0, 0, 0, 1], [2, 3, 3], 40)


def test_repeated_generator_degrees():
    data = HironakaData((2, 2), (0, 3, 3))
    assert data.rank == 3
    assert from_hironaka(data).coefficients(6) == geometric_product_series([1, 0, 0, 2], [2, 2], 6)


def test_from_molien_examples():
    ident = enumerate_group([GroupElement.identity(3)])
    H = from_molien(ident)
    assert H.function == rf([1], [(1, 3)]) and H.ambient_dim == 3 and H.source == "molien"
    neg = enumerate_group([GroupElement.from_rational([[-1, 0], [0, -1]])])
    assert from_molien(neg).function == rf([1, 0, 1], [(2, 2)])
    b2 = enumerate_group([GroupElement.from_rational(m) for m in ([[0, -1], [1, 0]], [[1, 0], [0, -1]])])
    assert from_molien(b2).function == from_hironaka(HironakaData((2, 4), (0,))).function


@pytest.mark.parametrize(
    "kwargs",
    [
        {"hsop_degrees": (), "generator_degrees": (0,)},
        {"hsop_degrees": (2,), "generator_degrees": ()},
        {"hsop_degrees": (0, 2), "generator_degrees": (0,)},
        {"hsop_degrees": (2,), "generator_degrees": (-1,)},
        {"hsop_degrees": (2,), "generator_degrees": (0, 0)},
    ],
)
def test_hironaka_validation(kwargs):
    with pytest.raises(ValueError):
        HironakaData(**kwargs)


def test_hironaka_json():
    data = HironakaData((2, 2, 2), (0, 2))
    assert HironakaData.from_json(data.to_json()) == data
    with pytest.raises(ParseError):
        HironakaData.from_json({"hsop_degrees": [2]})
    with pytest.raises(ParseError):
        HironakaData.from_json({"hsop_degrees": [0], "generator_degrees": [0]})


@pytest.mark.parametrize(
    "f",
    [
        RationalFunction([2], [1, -1]),  # constant term 2
        RationalFunction([1, -3], [1, -1]),  # 1 - 2z - 2z^2 ...
        RationalFunction([1], [2, -1]),  # 1/2 + z/4 + ...
    ],
)
def test_validation_rejects_non_hilbert(f):
    with pytest.raises(NotAHilbertSeries):
        from_rational_function(f)


def test_validation_accepts_raw():
    H = from_rational_function(rf([1, 0, 1], [(2, 3)]), ambient_dim=4)
    assert H.source == "raw" and H.to_json()["ambient_dim"] == 4


def test_unknown_source():
    with pytest.raises(ValueError):
        HilbertSeries(rf([1], [(1, 1)]), source="other")


def test_cm_examples():
    hopf = cm_pole_check(from_hironaka(HironakaData((2, 2, 2), (0, 2))))
    assert hopf.m == 2 and hopf.passed
    assert hopf.pole_orders == {1: 3, 2: 3}

    t3 = cm_pole_check(rf([1], [(3, 1)]))
    assert t3.m == 0 and not t3.passed
    assert t3.pole_at_one and t3.minus_one_ok and not t3.others_ok
    assert t3.offending == ((3, 1),)

    assert cm_pole_check(rf([1], [(1, 2)])).passed


def test_cm_minus_one_bound():
    # order m+2 at -1 breaks the -1 constraint
    f = RationalFunction.from_factored([1], [(1, 1)]) * RationalFunction([1], [1, 2, 1])
    report = cm_pole_check(f)
    assert report.m == 0 and not report.minus_one_ok
    assert report.offending == ((2, 2),)


def test_cm_non_cyclotomic_pole():
    f = RationalFunction([1], [1, -1]) * RationalFunction([1], [1, -2])
    report = cm_pole_check(f)
    assert not report.roots_of_unity_only and not report.passed


def test_cm_report_json():
    doc = cm_pole_check(rf([1], [(3, 1)])).to_json()
    assert doc["passed"] is False
    assert doc["offending_poles"] == [{"root_order": 3, "pole_order": 1}]
