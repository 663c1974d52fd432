import random

import pytest

from handleact.errors import DomainError, InputError
from handleact.surgery import (INFINITY, Component, RationalCoefficient,
                               SurgeryDiagram, boundary_disc_twist,
                               diagram_from_json, rolfsen_twist,
                               validate_diagram)


def test_coefficient_normalization():
    assert RationalCoefficient(2, 4) == RationalCoefficient(1, 2)
    assert RationalCoefficient(1, -2) == RationalCoefficient(-1, 2)
    assert RationalCoefficient(-3, 0) == INFINITY
    assert RationalCoefficient(0, 7) == RationalCoefficient(0, 1)
    assert str(RationalCoefficient(-3, 2)) == "-3/2"
    assert str(RationalCoefficient(4, 1)) == "4"
    assert str(INFINITY) == "inf"
    with pytest.raises(DomainError):
        RationalCoefficient(0, 0)


def chain_diagram(coeffs, linking):
    comps = tuple(Component("C%d" % i, c, True) for i, c in enumerate(coeffs))
    return SurgeryDiagram(comps, tuple(tuple(row) for row in linking))


def test_diagram_invariants():
    with pytest.raises(DomainError):
        chain_diagram([INFINITY, INFINITY], [[0, 1], [2, 0]])  # asymmetric
    with pytest.raises(DomainError):
        chain_diagram([INFINITY], [[1]])  # nonzero diagonal
    with pytest.raises(DomainError):
        chain_diagram([INFINITY], [[0, 0], [0, 0]])  # size mismatch


def test_rolfsen_examples():
    for n in (2, 3, 5):
        single = chain_diagram([INFINITY], [[0]])
        assert rolfsen_twist(single, 0, n).components[0].coeff == \
            RationalCoefficient(1, n)
        assert rolfsen_twist(single, 0, -(n - 1)).components[0].coeff == \
            RationalCoefficient(-1, n - 1)


def test_rolfsen_unlinked_component_unchanged():
    d = chain_diagram([INFINITY, RationalCoefficient(3, 7)], [[0, 0], [0, 0]])
    out = rolfsen_twist(d, 0, 4)
    assert out.components[1].coeff == RationalCoefficient(3, 7)


def test_rolfsen_linked_component_updates():
    d = chain_diagram([INFINITY, RationalCoefficient(3, 7)], [[0, 2], [2, 0]])
    out = rolfsen_twist(d, 0, 1)
    # numerator picks up t * lk^2 * denominator = 1*4*7
    assert out.components[1].coeff == RationalCoefficient(3 + 28, 7)


def test_rolfsen_linking_update():
    d = chain_diagram([INFINITY] * 3, [[0, 1, 2], [1, 0, 0], [2, 0, 0]])
    out = rolfsen_twist(d, 0, 3)
    assert out.linking[1][2] == 0 + 3 * 1 * 2
    assert out.linking[0][1] == 1  # linking with the twisted circle keeps
    assert out.linking[1][1] == 0


def test_rolfsen_requires_unknotted():
    comps = (Component("K", INFINITY, False),)
    d = SurgeryDiagram(comps, ((0,),))
    with pytest.raises(DomainError):
        rolfsen_twist(d, 0, 1)
    with pytest.raises(DomainError):
        rolfsen_twist(d, 5, 1)


def random_diagram(rng):
    n = rng.randrange(1, 5)
    coeffs = []
    for _ in range(n):
        b = rng.randrange(0, 4)
        a = rng.randrange(-6, 7) or 1
        coeffs.append(RationalCoefficient(a, b))
    linking = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            linking[i][j] = linking[j][i] = rng.randrange(-2, 3)
    return chain_diagram(coeffs, linking)


def test_twist_then_untwist_restores():
    rng = random.Random(21)
    for _ in range(200):
        d = random_diagram(rng)
        u = rng.randrange(len(d.components))
        t = rng.randrange(-3, 4)
        back = rolfsen_twist(rolfsen_twist(d, u, t), u, -t)
        assert back == d
        vec = [rng.randrange(-2, 3) for _ in d.components]
        back = boundary_disc_twist(boundary_disc_twist(d, vec, t), vec, -t)
        assert back == d


def test_coefficients_stay_reduced():
    rng = random.Random(22)
    for _ in range(200):
        d = random_diagram(rng)
        u = rng.randrange(len(d.components))
        out = rolfsen_twist(d, u, rng.randrange(-3, 4))
        for c in out.components:
            from math import gcd
            assert c.coeff.b >= 0
            if c.coeff.b == 0:
                assert c.coeff.a == 1
            else:
                assert gcd(c.coeff.a, c.coeff.b) == 1


def test_boundary_disc_examples():
    for n in (2, 4):
        d = chain_diagram([RationalCoefficient(-1, n - 1)], [[0]])
        out = boundary_disc_twist(d, [1], -1)
        assert out.components[0].coeff == RationalCoefficient(-n, n - 1)

        d = chain_diagram([RationalCoefficient(1, n)], [[0]])
        for _ in range(3):
            d = boundary_disc_twist(d, [1], -1)
        assert d.components[0].coeff == RationalCoefficient(1 - 3 * n, n)

    d = chain_diagram([RationalCoefficient(5, 3)], [[0]])
    assert boundary_disc_twist(d, [0], -1).components[0].coeff == \
        RationalCoefficient(5, 3)
    with pytest.raises(DomainError):
        boundary_disc_twist(d, [0, 1], -1)


def test_validate_reports():
    empty = SurgeryDiagram((), ())
    report = validate_diagram(empty)
    assert report["valid"] and report["determinant"] == 1

    bad = {"components": [{"coeff": [1, 0]}, {"coeff": [1, 0]}],
           "linking": [[0, 1], [2, 0]]}
    report = validate_diagram(bad)
    assert not report["valid"]
    assert any("symmetric" in v for v in report["violations"])


def test_diagram_json_round_trip():
    rng = random.Random(23)
    for _ in range(20):
        d = random_diagram(rng)
        assert diagram_from_json(d.to_json()) == d


def test_diagram_json_errors():
    with pytest.raises(InputError):
        diagram_from_json({"components": []})
    with pytest.raises(InputError):
        diagram_from_json({"components": [{"coeff": [0, 0]}], "linking": [[0]]})
