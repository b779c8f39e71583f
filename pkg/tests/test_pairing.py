"""Elliptic curve arithmetic, torsion bases, and the Weil pairing bridge."""

import pytest

from rootnumbers.errors import (IdentityViolationError, InvalidFieldError,
                                NotInSubgroupError, ResourceLimitError)
from rootnumbers.fields import PrimeField, build_extension
from rootnumbers.orbits import classify_pm
from rootnumbers.pairing import (Curve, CurveSpec, count_over_extension,
                                 find_curve, full_torsion_field,
                                 o_det_bridge_check, o_invariant,
                                 pairing_setup, point_count, torsion_basis,
                                 trace_of_frobenius, weil_pairing)


def brute_count(spec):
    n = 1
    for x in range(spec.l):
        for y in range(spec.l):
            if (y * y - x ** 3 - spec.a * x - spec.b) % spec.l == 0:
                n += 1
    return n


@pytest.mark.parametrize("l,a,b", [(5, 0, 1), (7, 1, 1), (5, 2, 1), (11, 3, 5), (13, 1, 0)])
def test_point_count_against_scan(l, a, b):
    spec = CurveSpec(l, a, b)
    assert point_count(spec) == brute_count(spec)


def test_hasse_bound():
    import math
    for l, a, b in [(5, 0, 1), (7, 1, 1), (11, 3, 5), (23, 2, 3)]:
        spec = CurveSpec(l, a, b)
        assert abs(l + 1 - point_count(spec)) <= 2 * math.isqrt(4 * l)


def test_curve_spec_validation():
    with pytest.raises(InvalidFieldError):
        CurveSpec(3, 0, 1)
    with pytest.raises(InvalidFieldError):
        CurveSpec(6, 0, 1)
    with pytest.raises(InvalidFieldError):
        CurveSpec(5, 0, 0)   # 4a^3 + 27b^2 = 0


def test_count_over_extension_against_scan():
    spec = CurveSpec(5, 0, 1)
    field = build_extension(5, 2)
    n = 1
    a, b = field(spec.a), field(spec.b)
    for xi in range(field.order):
        x = field.element_from_index(xi)
        rhs = x * x * x + a * x + b
        for yi in range(field.order):
            y = field.element_from_index(yi)
            if y * y == rhs:
                n += 1
    assert count_over_extension(spec, 2) == n
    assert count_over_extension(spec, 1) == point_count(spec)


def all_points(curve):
    pts = [curve.infinity()]
    for x in range(curve.spec.l):
        got = curve.lift_x(x)
        if got is not None:
            pts.append(got)
            if got.y != -got.y:
                pts.append(-got)
    return pts


def test_group_law_properties():
    spec = CurveSpec(7, 1, 1)
    curve = Curve(spec, PrimeField(7))
    pts = all_points(curve)
    assert len(pts) == point_count(spec)
    for P in pts:
        assert P + curve.infinity() == P
        assert (P + (-P)).is_infinity()
        for Q in pts:
            assert P + Q == Q + P
            for R in pts[::3]:
                assert (P + Q) + R == P + (Q + R)


def test_scalar_multiplication_order():
    spec = CurveSpec(7, 1, 1)
    curve = Curve(spec, PrimeField(7))
    n = point_count(spec)
    for P in all_points(curve):
        assert (n * P).is_infinity()


# frozen choices of the auto-selected curve for each p
FROZEN_CURVES = {3: ((5, 0, 1), 2), 5: ((7, 1, 1), 4), 7: ((5, 2, 1), 6)}


@pytest.mark.parametrize("p,expected", sorted(FROZEN_CURVES.items()))
def test_find_curve_frozen(p, expected):
    (l, a, b), k = expected
    spec = find_curve(p)
    assert (spec.l, spec.a, spec.b) == (l, a, b)
    assert point_count(spec) % p == 0
    assert full_torsion_field(spec, p) == k


def test_trace_values():
    assert trace_of_frobenius(CurveSpec(5, 0, 1)) == 0   # supersingular
    assert trace_of_frobenius(CurveSpec(7, 1, 1)) == 3
    assert trace_of_frobenius(CurveSpec(5, 2, 1)) == -1


@pytest.mark.parametrize("p", (3, 5, 7))
def test_torsion_basis(p):
    spec, k = find_curve(p), None
    basis = torsion_basis(spec, p)
    P, Q, zeta = basis.P, basis.Q, basis.zeta
    assert (p * P).is_infinity() and not P.is_infinity()
    assert (p * Q).is_infinity() and not Q.is_infinity()
    one = P.curve.field.one()
    assert zeta != one and zeta ** p == one
    # P and Q generate different subgroups
    assert all((i * P) != Q for i in range(1, p))


def test_pairing_bilinear_exhaustive_p3():
    basis = torsion_basis(find_curve(3), 3)
    P, Q, zeta = basis.P, basis.Q, basis.zeta
    e = weil_pairing(P, Q, 3)
    assert e in (zeta, zeta * zeta) and e != basis.P.curve.field.one()
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    lhs = weil_pairing(i * P + j * Q, k * P + l * Q, 3)
                    assert lhs == e ** ((i * l - j * k) % 3)


def test_pairing_alternating_and_antisymmetric():
    basis = torsion_basis(find_curve(5), 5)
    P, Q = basis.P, basis.Q
    one = P.curve.field.one()
    assert weil_pairing(P, P, 5) == one
    assert weil_pairing(Q, Q, 5) == one
    assert weil_pairing(P + Q, P + Q, 5) == one
    assert weil_pairing(P, Q, 5) * weil_pairing(Q, P, 5) == one


def test_pairing_rejects_non_torsion():
    basis = torsion_basis(find_curve(3), 3)
    curve = basis.P.curve
    # find a point of order not dividing 3
    n = basis.n_points
    target = None
    for xi in range(curve.field.order):
        cand = curve.lift_x(curve.field.element_from_index(xi))
        if cand is not None and not (3 * cand).is_infinity():
            target = cand
            break
    assert target is not None
    with pytest.raises(NotInSubgroupError):
        weil_pairing(target, basis.Q, 3)
    assert n % 3 == 0


def test_pairing_with_infinity_is_one():
    basis = torsion_basis(find_curve(3), 3)
    one = basis.P.curve.field.one()
    assert weil_pairing(basis.P.curve.infinity(), basis.Q, 3) == one


def test_o_invariant_generator_independence():
    basis = torsion_basis(find_curve(5), 5)
    P, Q, zeta = basis.P, basis.Q, basis.zeta
    gens = (P, Q, P + Q)
    base = o_invariant(gens, zeta, 5)
    assert base.cls in ("square", "nonsquare")
    # rescale each generator by a unit: same subgroups, same class
    for u in (2, 3, 4):
        scaled = (u * P, Q, u * (P + Q))
        assert o_invariant(scaled, zeta, 5).cls == base.cls


def test_o_invariant_degenerate_on_repeated_subgroup():
    basis = torsion_basis(find_curve(5), 5)
    P, Q, zeta = basis.P, basis.Q, basis.zeta
    res = o_invariant((P, 2 * P, Q), zeta, 5)
    assert res.cls == "degenerate"
    assert res.exponents is None


@pytest.mark.parametrize("coeffs,expected", [
    (((1, 0), (0, 1), (1, 1)), "plus"),
    (((1, 0), (0, 1), (2, 1)), "minus"),
    (((1, 0), (0, 1), (1, 2)), "minus"),
    (((1, 0), (2, 0), (0, 1)), "degenerate"),
])
def test_bridge_p5(coeffs, expected):
    basis = torsion_basis(find_curve(5), 5)
    res = o_det_bridge_check(basis, coeffs)
    assert res.ok
    assert res.det_class == expected
    assert classify_pm(coeffs, 5) == expected


def test_bridge_p3_all_lines():
    basis = torsion_basis(find_curve(3), 3)
    lines = [(1, 0), (0, 1), (1, 1), (1, 2)]
    plus = minus = 0
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                triple = (lines[i], lines[j], lines[k])
                res = o_det_bridge_check(basis, triple)
                assert res.ok
                if res.det_class == "plus":
                    plus += 1
                else:
                    minus += 1
    assert plus + minus == 4
    # class counts match the marking-triple census
    census = [classify_pm((lines[i], lines[j], lines[k]), 3)
              for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)]
    assert plus == census.count("plus") and minus == census.count("minus")


def test_bridge_rejects_zero_pair():
    basis = torsion_basis(find_curve(3), 3)
    with pytest.raises(ValueError):
        o_det_bridge_check(basis, ((0, 0), (0, 1), (1, 1)))


def test_pairing_setup_manifest():
    setup = pairing_setup(3)
    m = setup.manifest()
    assert m["curve"] == {"l": 5, "a": 0, "b": 1}
    assert m["extension_degree"] == 2
    assert m["base_point_count"] == 6
    assert m["frobenius_trace"] == 0
    assert int(m["points_over_extension"]) == count_over_extension(setup.curve_spec, setup.k)
    assert m["seed"] == 0


def test_pairing_seed_determinism():
    basis = torsion_basis(find_curve(5), 5)
    a = weil_pairing(basis.P, basis.Q, 5, seed=0)
    b = weil_pairing(basis.P, basis.Q, 5, seed=0)
    c = weil_pairing(basis.P, basis.Q, 5, seed=99)
    assert a == b == c   # the value is seed-independent, only shifts vary


def test_find_curve_errors():
    with pytest.raises(InvalidFieldError):
        find_curve(4)
    with pytest.raises(ResourceLimitError):
        full_torsion_field(CurveSpec(5, 0, 1), 11, k_max=2)


def test_full_torsion_field_rejects_same_prime():
    with pytest.raises(InvalidFieldError):
        full_torsion_field(CurveSpec(5, 0, 1), 5)
