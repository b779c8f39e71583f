"""Weil pairings on p-torsion of small elliptic curves, and the order invariant.

Curves are short Weierstrass y^2 = x^3 + A x + B over F_l with l > 3 a prime
different from p.  The base point count is an exhaustive character sum; counts
over extensions come from the Frobenius trace recurrence.  The p-torsion is
realized inside E(F_{l^k}) for the smallest usable k, a basis is located by a
deterministic cofactor search, and the pairing is Miller's algorithm evaluated
on shifted divisors (P+R)-(R), (Q+S)-(S) with the shifts drawn from a seeded
sequence and retried on any degenerate evaluation.

Given three pairwise distinct order-p subgroups C_i = <a_i P + b_i Q>, the
pairing exponents of (C_2,C_3), (C_3,C_1), (C_1,C_2) against zeta = e_p(P,Q)
are exactly the coefficient determinants (a_2 b_3 - a_3 b_2, ...), which ties
the quadratic class of their product to the determinant classification of
marking triples; o_det_bridge_check verifies that identity pointwise.
"""

import math
import random
from dataclasses import dataclass

from .errors import (IdentityViolationError, InvalidFieldError,
                     NotInSubgroupError, ResourceLimitError,
                     RetryExhaustedError)
from .fields import (ExtField, build_extension, discrete_log, field_sqrt,
                     is_prime, legendre_symbol)
from .orbits import classify_pm


@dataclass(frozen=True)
class CurveSpec:
    """y^2 = x^3 + a x + b over F_l, nonsingular, l > 3 prime."""

    l: int
    a: int
    b: int

    def __post_init__(self):
        if self.l <= 3 or not is_prime(self.l):
            raise InvalidFieldError(f"curve prime must be > 3, got {self.l}")
        object.__setattr__(self, "a", self.a % self.l)
        object.__setattr__(self, "b", self.b % self.l)
        if (4 * self.a ** 3 + 27 * self.b ** 2) % self.l == 0:
            raise InvalidFieldError("singular curve: 4a^3 + 27b^2 = 0")


class Curve:
    """The same curve with coefficients moved into a chosen field."""

    def __init__(self, spec, field):
        if field.char != spec.l:
            raise InvalidFieldError("field characteristic does not match the curve")
        self.spec = spec
        self.field = field
        self.a = field(spec.a)
        self.b = field(spec.b)

    def infinity(self):
        return Point(self, None, None)

    def point(self, x, y):
        x, y = self.field(x), self.field(y)
        if y * y != x * x * x + self.a * x + self.b:
            raise ValueError("point is not on the curve")
        return Point(self, x, y)

    def lift_x(self, x):
        """The point (x, sqrt(rhs)) with the deterministic root, or None."""
        x = self.field(x)
        rhs = x * x * x + self.a * x + self.b
        y = field_sqrt(rhs)
        if y is None:
            return None
        return Point(self, x, y)

    def __repr__(self):
        return f"E(y^2=x^3+{self.spec.a}x+{self.spec.b})/{self.field!r}"


class Point:
    """A point on a Curve; None coordinates mean the point at infinity."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    def is_infinity(self):
        return self.x is None

    def __neg__(self):
        if self.is_infinity():
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, other):
        if self.is_infinity():
            return other
        if other.is_infinity():
            return self
        if self.x == other.x:
            if self.y == -other.y:
                return self.curve.infinity()
            lam = (3 * self.x * self.x + self.curve.a) / (2 * self.y)
        else:
            lam = (other.y - self.y) / (other.x - self.x)
        x3 = lam * lam - self.x - other.x
        y3 = lam * (self.x - x3) - self.y
        return Point(self.curve, x3, y3)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        out = self.curve.infinity()
        acc = self
        while n:
            if n & 1:
                out = out + acc
            acc = acc + acc
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.is_infinity() or other.is_infinity():
            return self.is_infinity() and other.is_infinity()
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity():
            return hash(("pt", "oo"))
        return hash(("pt", self.x, self.y))

    def __repr__(self):
        return "O" if self.is_infinity() else f"({self.x!r}, {self.y!r})"


def point_count(spec):
    """#E(F_l) by the character sum l + 1 + sum_x (x^3+ax+b / l)."""
    l = spec.l
    total = l + 1
    for x in range(l):
        total += legendre_symbol((x * x * x + spec.a * x + spec.b) % l, l)
    if abs(total - l - 1) > 2 * math.isqrt(l) + 1:
        raise IdentityViolationError("point count escaped the Hasse interval")
    return total


def trace_of_frobenius(spec):
    return spec.l + 1 - point_count(spec)


def count_over_extension(spec, k):
    """#E(F_{l^k}) from the trace recurrence t_{i+1} = t_1 t_i - l t_{i-1}."""
    l, t1 = spec.l, trace_of_frobenius(spec)
    t_prev, t_cur = 2, t1
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, t1 * t_cur - l * t_prev
    return l ** k + 1 - t_cur


@dataclass
class TorsionBasis:
    """A basis (P, Q) of E[p] over F_{l^k} with zeta = e_p(P, Q) of order p."""

    p: int
    k: int
    curve: Curve
    P: Point
    Q: Point
    zeta: object
    n_points: int


def _multiplicative_order(a, n):
    """Order of a modulo n."""
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError("not a unit")
    k, acc = 1, a
    while acc != 1:
        acc = acc * a % n
        k += 1
    return k


def _reduce_to_order_p(s, p):
    # s has p-power order; divide until the order is exactly p
    while not (p * s).is_infinity():
        s = p * s
    return s


def _basis_probe(spec, p, k, budget):
    """Search E(F_{l^k}) for a basis of E[p]; None when the budget runs out."""
    n_points = count_over_extension(spec, k)
    if n_points % (p * p):
        return None
    v = 0
    m = n_points
    while m % p == 0:
        m //= p
        v += 1
    cofactor = n_points // (p ** v)
    field = build_extension(spec.l, k)
    curve = Curve(spec, field)
    first = None
    subgroup = None
    tried = 0
    idx = 0
    order = field.order
    while tried < budget and idx < order:
        pt = curve.lift_x(field.element_from_index(idx))
        idx += 1
        if pt is None:
            continue
        tried += 1
        s = cofactor * pt
        if s.is_infinity():
            continue
        s = _reduce_to_order_p(s, p)
        if first is None:
            first = s
            subgroup = set()
            acc = curve.infinity()
            for _ in range(p):
                subgroup.add(acc)
                acc = acc + first
            continue
        if s not in subgroup:
            return TorsionBasis(p=p, k=k, curve=curve, P=first, Q=s,
                                zeta=None, n_points=n_points)
    return None


def full_torsion_field(spec, p, k_max=24, budget=200):
    """The least extension degree k with E[p] inside E(F_{l^k}).

    k must be a multiple of the order of l mod p (the pairing forces the p-th
    roots of unity into the field); each candidate is certified by actually
    finding two independent p-torsion points.
    """
    if spec.l == p:
        raise InvalidFieldError("the curve prime must differ from p")
    if p == 2 or not is_prime(p):
        raise InvalidFieldError(f"need an odd prime p, got {p}")
    d0 = _multiplicative_order(spec.l, p)
    k = d0
    while k <= k_max:
        if _basis_probe(spec, p, k, budget) is not None:
            return k
        k += d0
    raise ResourceLimitError(f"E[{p}] not found within extension degree {k_max}")


def torsion_basis(spec, p, k=None, seed=0, budget=200):
    """A deterministic basis of E[p] with its pairing value zeta of exact order p."""
    if k is None:
        k = full_torsion_field(spec, p)
    basis = _basis_probe(spec, p, k, budget)
    if basis is None:
        raise ResourceLimitError(f"no basis of E[{p}] found over degree {k} within budget")
    zeta = weil_pairing(basis.P, basis.Q, p, seed=seed)
    one = basis.curve.field.one()
    if zeta == one or zeta ** p != one:
        raise IdentityViolationError("pairing of a basis must have exact order p")
    basis.zeta = zeta
    return basis


# ---------------------------------------------------------------------------
# Miller's algorithm


class _DegenerateEvaluation(Exception):
    pass


def _line_pair(a_pt, b_pt, x_pt):
    """(l(X), v(X)): the line through a_pt and b_pt (tangent when equal) and
    the vertical at their sum, both evaluated at x_pt."""
    curve = a_pt.curve
    one = curve.field.one()
    if a_pt.is_infinity() or b_pt.is_infinity():
        # adding O: the line through O and B is the vertical at B, which is
        # also the vertical at the sum, so the contribution cancels to 1
        return (one, one)
    if a_pt.x == b_pt.x and a_pt.y == -b_pt.y:
        # a + b = O: the line is the vertical at a, no extra denominator
        return (x_pt.x - a_pt.x, one)
    if a_pt == b_pt:
        lam = (3 * a_pt.x * a_pt.x + curve.a) / (2 * a_pt.y)
    else:
        lam = (b_pt.y - a_pt.y) / (b_pt.x - a_pt.x)
    c_pt = a_pt + b_pt
    num = (x_pt.y - a_pt.y) - lam * (x_pt.x - a_pt.x)
    den = x_pt.x - c_pt.x
    return (num, den)


def _miller(p_pt, n, x_pt):
    """f_{n,P}(X) for the function with divisor n(P) - ([n]P) - (n-1)(O)."""
    field = p_pt.curve.field
    f_num, f_den = field.one(), field.one()
    v = p_pt
    for bit in bin(n)[3:]:
        num, den = _line_pair(v, v, x_pt)
        f_num = f_num * f_num * num
        f_den = f_den * f_den * den
        v = v + v
        if bit == "1":
            num, den = _line_pair(v, p_pt, x_pt)
            f_num = f_num * num
            f_den = f_den * den
            v = v + p_pt
    if f_num.is_zero() or f_den.is_zero():
        raise _DegenerateEvaluation
    return f_num / f_den


def _random_point(curve, rng):
    field = curve.field
    for _ in range(4 * field.char + 40):
        pt = curve.lift_x(field.element_from_index(rng.randrange(field.order)))
        if pt is not None and not pt.is_infinity():
            return pt if rng.getrandbits(1) else -pt
    raise RetryExhaustedError("could not sample a shift point")


def weil_pairing(p_pt, q_pt, p, seed=0):
    """e_p(P, Q) in mu_p, from fully shifted divisors.

    With D_P = (P+R) - (R) and D_Q = (Q+S) - (S), the function
    h_P = f_{p,P+R} / f_{p,R} has divisor exactly p(P+R) - p(R), and the
    pairing is h_P(D_Q) / h_Q(D_P).  Both evaluations are at degree-zero
    divisors, so the Miller normalization cancels and no value depends on
    the choice of h.  Shifts come from a seeded sequence; overlapping
    supports or a zero in a line evaluation trigger a retry, at most 32.
    """
    curve = p_pt.curve
    one = curve.field.one()
    if p_pt.is_infinity() or q_pt.is_infinity():
        return one
    if not (p * p_pt).is_infinity() or not (p * q_pt).is_infinity():
        raise NotInSubgroupError("pairing arguments must be p-torsion")
    rng = random.Random(f"weil:{curve.spec.l}:{curve.field.order}:{p}:{seed}")
    for _ in range(32):
        r_pt = _random_point(curve, rng)
        s_pt = _random_point(curve, rng)
        pr = p_pt + r_pt
        qs = q_pt + s_pt
        if pr.is_infinity() or qs.is_infinity():
            continue
        if len({pr, r_pt, qs, s_pt}) < 4:
            continue
        try:
            num = (_miller(pr, p, qs) * _miller(r_pt, p, s_pt)) / (
                _miller(r_pt, p, qs) * _miller(pr, p, s_pt))
            den = (_miller(qs, p, pr) * _miller(s_pt, p, r_pt)) / (
                _miller(s_pt, p, pr) * _miller(qs, p, r_pt))
            return num / den
        except (_DegenerateEvaluation, ZeroDivisionError):
            continue
    raise RetryExhaustedError("no nondegenerate shift pair found in 32 tries")


# ---------------------------------------------------------------------------
# the order invariant and the determinant bridge


@dataclass
class OInvariantResult:
    exponents: tuple          # (a, b, c) against zeta, or None when degenerate
    cls: str                  # 'square' | 'nonsquare' | 'degenerate'


def o_invariant(gens, zeta, p, seed=0):
    """Quadratic class of a*b*c where e(C_2,C_3) = zeta^a etc.

    The class does not depend on the choice of generators of the three
    subgroups; a repeated subgroup makes the result degenerate.
    """
    p1, p2, p3 = gens
    one = p1.curve.field.one()
    e23 = weil_pairing(p2, p3, p, seed=seed)
    e31 = weil_pairing(p3, p1, p, seed=seed)
    e12 = weil_pairing(p1, p2, p, seed=seed)
    if e23 == one or e31 == one or e12 == one:
        return OInvariantResult(exponents=None, cls="degenerate")
    a = discrete_log(zeta, e23, p)
    b = discrete_log(zeta, e31, p)
    c = discrete_log(zeta, e12, p)
    cls = "square" if legendre_symbol(a * b * c % p, p) == 1 else "nonsquare"
    return OInvariantResult(exponents=(a, b, c), cls=cls)


@dataclass
class BridgeResult:
    coeffs: tuple
    dets: tuple
    o_result: OInvariantResult
    det_class: str
    ok: bool


def o_det_bridge_check(basis, coeffs, seed=0):
    """Check that pairing exponents equal coefficient determinants and the
    induced plus/minus classes agree with the marking-triple classification."""
    p = basis.p
    coeffs = tuple((int(a) % p, int(b) % p) for a, b in coeffs)
    if any(c == (0, 0) for c in coeffs):
        raise ValueError("subgroup coefficients must be nonzero pairs")
    gens = tuple(a * basis.P + b * basis.Q for a, b in coeffs)
    res = o_invariant(gens, basis.zeta, p, seed=seed)
    (a1, b1), (a2, b2), (a3, b3) = coeffs
    dets = ((a2 * b3 - a3 * b2) % p,
            (a3 * b1 - a1 * b3) % p,
            (a1 * b2 - a2 * b1) % p)
    det_class = classify_pm(coeffs, p)
    if res.cls == "degenerate":
        ok = 0 in dets
    else:
        ok = (res.exponents == dets
              and {"square": "plus", "nonsquare": "minus"}[res.cls] == det_class)
    return BridgeResult(coeffs=coeffs, dets=dets, o_result=res,
                        det_class=det_class, ok=ok)


# ---------------------------------------------------------------------------
# curve selection


@dataclass
class PairingSetup:
    """Everything needed to reproduce a pairing computation."""

    p: int
    curve_spec: CurveSpec
    n_base: int
    trace: int
    k: int
    field_modulus: tuple
    basis: TorsionBasis
    seed: int

    def manifest(self):
        b = self.basis
        return {
            "p": self.p,
            "curve": {"l": self.curve_spec.l, "a": self.curve_spec.a, "b": self.curve_spec.b},
            "base_point_count": self.n_base,
            "frobenius_trace": self.trace,
            "extension_degree": self.k,
            "field_modulus": list(self.field_modulus),
            "basis_P": [list(b.P.x.coeffs), list(b.P.y.coeffs)],
            "basis_Q": [list(b.Q.x.coeffs), list(b.Q.y.coeffs)],
            "zeta": list(b.zeta.coeffs),
            "points_over_extension": str(b.n_points),
            "seed": self.seed,
        }


def find_curve(p, l_max=5000):
    """Smallest l, then lexicographically smallest (a, b), with p | #E(F_l)."""
    if p == 2 or not is_prime(p):
        raise InvalidFieldError(f"need an odd prime p, got {p}")
    l = 5
    while l <= l_max:
        if is_prime(l) and l != p and p <= l + 1 + 2 * math.isqrt(l) + 1:
            for a in range(l):
                for b in range(l):
                    if (4 * a ** 3 + 27 * b ** 2) % l == 0:
                        continue
                    spec = CurveSpec(l, a, b)
                    if point_count(spec) % p == 0:
                        return spec
        l += 2
    raise ResourceLimitError(f"no curve with {p}-torsion found for l <= {l_max}")


def pairing_setup(p, l_max=5000, k_max=24, seed=0):
    """Select a curve, realize E[p], and package the manifest."""
    spec = find_curve(p, l_max)
    k = full_torsion_field(spec, p, k_max=k_max)
    basis = torsion_basis(spec, p, k=k, seed=seed)
    return PairingSetup(
        p=p,
        curve_spec=spec,
        n_base=point_count(spec),
        trace=trace_of_frobenius(spec),
        k=k,
        field_modulus=basis.curve.field.modulus,
        basis=basis,
        seed=seed,
    )
