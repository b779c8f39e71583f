"""Exact arithmetic in prime fields, small extension fields, and cyclotomic rings.

Three element types, all immutable and hashable where equality is cheap:

* FpElement      -- residues mod a prime q, built through PrimeField(q).
* ExtFieldElement -- F_{l^k} as F_l[x] modulo a fixed irreducible polynomial,
                     built through build_extension(l, k).
* CyclotomicNumber -- elements of Q[x]/(x^m - 1) read inside Q(zeta_m) via
                     x -> exp(2*pi*i/m).  Two representatives are equal when
                     their difference is divisible by the m-th cyclotomic
                     polynomial, which is decided exactly.

Everything is pure Python over int/Fraction; no floating point enters any
equality decision.  The complex embedding exists only for magnitude checks.
"""

import cmath
import functools
import itertools
import math
from fractions import Fraction

from .errors import InvalidFieldError, NotInSubgroupError


# ---------------------------------------------------------------------------
# primes and small factoring


def is_prime(n):
    """Trial-division primality test, adequate for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Return the prime factorization of n >= 1 as a dict prime -> exponent."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# prime fields


class PrimeField:
    """The field Z/qZ for a prime q."""

    def __init__(self, q):
        if not is_prime(q):
            raise InvalidFieldError(f"{q} is not prime")
        self.q = q

    @property
    def order(self):
        return self.q

    @property
    def char(self):
        return self.q

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.field.q != self.q:
                raise InvalidFieldError("element from a different prime field")
            return value
        return FpElement(int(value) % self.q, self)

    def zero(self):
        return FpElement(0, self)

    def one(self):
        return FpElement(1, self)

    def element_from_index(self, i):
        """Deterministic enumeration: index i -> residue i, for 0 <= i < q."""
        if not 0 <= i < self.q:
            raise ValueError(f"index {i} out of range for F_{self.q}")
        return FpElement(i, self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"F_{self.q}"


class FpElement:
    """A residue in F_q with the usual operator overloads."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.q
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field.q != self.field.q:
                raise InvalidFieldError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.field.q}")
        return FpElement(pow(self.value, -1, self.field.q), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.field.q), self.field)

    def is_zero(self):
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}"


def legendre_symbol(a, q):
    """(a/q) in {-1, 0, 1} for an odd prime q; a may be an int or FpElement."""
    if q == 2 or not is_prime(q):
        raise InvalidFieldError(f"Legendre symbol needs an odd prime, got {q}")
    a = int(a) % q
    if a == 0:
        return 0
    s = pow(a, (q - 1) // 2, q)
    return -1 if s == q - 1 else 1


@functools.lru_cache(maxsize=None)
def primitive_root_int(q):
    """Smallest positive integer generating F_q^*."""
    if not is_prime(q):
        raise InvalidFieldError(f"{q} is not prime")
    if q == 2:
        return 1
    n = q - 1
    prime_factors = list(factorize(n))
    for g in range(2, q):
        if all(pow(g, n // f, q) != 1 for f in prime_factors):
            return g
    raise InvalidFieldError(f"no generator found mod {q}")  # unreachable


def primitive_root(q):
    """Smallest generator of F_q^*, as an FpElement."""
    return PrimeField(q)(primitive_root_int(q))


@functools.lru_cache(maxsize=None)
def dlog_table(q):
    """Map x -> k with g^k = x in F_q^*, for the fixed smallest generator g."""
    g = primitive_root_int(q)
    table = {}
    acc = 1
    for k in range(q - 1):
        table[acc] = k
        acc = acc * g % q
    return table


# ---------------------------------------------------------------------------
# polynomial helpers over F_l (coefficient tuples, low degree first)


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, l):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % l
    return _poly_trim(out)


def _poly_mod(a, m, l):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        c = a[-1] % l
        if c:
            off = len(a) - 1 - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - c * m[i]) % l
        a.pop()
    return _poly_trim(a)


def _poly_powmod(a, n, m, l):
    result = (1,)
    base = _poly_mod(a, m, l)
    while n:
        if n & 1:
            result = _poly_mod(_poly_mul(result, base, l), m, l)
        base = _poly_mod(_poly_mul(base, base, l), m, l)
        n >>= 1
    return result

def _poly_gcd(a, b, l):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        inv = pow(b[-1], -1, l)
        bm = tuple(c * inv % l for c in b)  # monic divisor
        a, b = b, _poly_mod(a, bm, l)
    return a


def _is_irreducible(f, l):
    """Rabin test: x^(l^k) = x mod f and gcd(x^(l^(k/t)) - x, f) = 1 for prime t | k."""
    k = len(f) - 1
    x = (0, 1)
    xq = _poly_powmod(x, l ** k, f, l)
    if _poly_trim(xq) != _poly_trim(x):
        return False
    for t in factorize(k):
        d = k // t
        xd = _poly_powmod(x, l ** d, f, l)
        diff = _poly_trim([(a - b) % l for a, b in itertools.zip_longest(xd, x, fillvalue=0)])
        g = _poly_gcd(f, diff, l)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def build_extension(l, k):
    """The field F_{l^k}, defined by the lexicographically smallest monic
    irreducible polynomial of degree k (coefficients ordered from x^(k-1)
    down to the constant term)."""
    if not is_prime(l):
        raise InvalidFieldError(f"{l} is not prime")
    if k < 1:
        raise InvalidFieldError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        modulus = (0, 1)
        return ExtField(l, 1, modulus)
    for c in range(l ** k):
        digits = []
        t = c
        for _ in range(k):
            digits.append(t % l)
            t //= l
        # digits are base-l least-significant first, so digits[i] is the
        # coefficient of x^i; counter order is then lexicographic on the
        # descending-power tuple (a_{k-1}, ..., a_0)
        f = tuple(digits) + (1,)
        if _is_irreducible(f, l):
            return ExtField(l, k, f)
    raise InvalidFieldError(f"no irreducible polynomial of degree {k} over F_{l}")  # unreachable


class ExtField:
    """F_{l^k} presented as F_l[x] / (modulus)."""

    def __init__(self, l, k, modulus):
        self.l = l
        self.k = k
        self.modulus = modulus

    @property
    def order(self):
        return self.l ** self.k

    @property
    def char(self):
        return self.l

    def __call__(self, value):
        if isinstance(value, ExtFieldElement):
            if value.field is not self and (value.field.l, value.field.k) != (self.l, self.k):
                raise InvalidFieldError("element from a different extension field")
            return value
        if isinstance(value, FpElement):
            value = value.value
        if isinstance(value, int):
            coeffs = [value % self.l] + [0] * (self.k - 1)
            return ExtFieldElement(tuple(coeffs), self)
        coeffs = [int(v) % self.l for v in value]
        if len(coeffs) > self.k:
            raise ValueError(f"too many coefficients for degree-{self.k} extension")
        coeffs += [0] * (self.k - len(coeffs))
        return ExtFieldElement(tuple(coeffs), self)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The residue class of x."""
        return self([0, 1] if self.k > 1 else [0])

    def element_from_index(self, i):
        """Deterministic enumeration of all l^k elements by base-l digits."""
        if not 0 <= i < self.order:
            raise ValueError(f"index {i} out of range for field of order {self.order}")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(i % self.l)
            i //= self.l
        return ExtFieldElement(tuple(coeffs), self)

    def __eq__(self, other):
        return (isinstance(other, ExtField)
                and (other.l, other.k, other.modulus) == (self.l, self.k, self.modulus))

    def __hash__(self):
        return hash(("ExtField", self.l, self.k, self.modulus))

    def __repr__(self):
        return f"F_{self.l}^{self.k}"


class ExtFieldElement:
    """An element of F_{l^k}, stored as a fixed-length coefficient tuple."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        self.coeffs = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ExtFieldElement):
            if other.field != self.field:
                raise InvalidFieldError("mixed extension fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        l = self.field.l
        return ExtFieldElement(tuple((a + b) % l for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        l = self.field.l
        return ExtFieldElement(tuple((a - b) % l for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        prod = _poly_mul(self.coeffs, o.coeffs, f.l)
        red = _poly_mod(prod, f.modulus, f.l)
        return f(list(red))

    __rmul__ = __mul__

    def __neg__(self):
        l = self.field.l
        return ExtFieldElement(tuple((-a) % l for a in self.coeffs), self.field)

    def inverse(self):
        # extended Euclid in F_l[x] against the defining polynomial
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse")
        l = self.field.l
        r0, r1 = _poly_trim(self.field.modulus), _poly_trim(self.coeffs)
        s0, s1 = (), (1,)
        while r1:
            inv = pow(r1[-1], -1, l)
            # long division r0 = q*r1 + r
            q = [0] * (max(len(r0) - len(r1) + 1, 1))
            r = list(r0)
            while len(r) >= len(r1) and _poly_trim(r):
                if r[-1] % l == 0:
                    r.pop()
                    continue
                c = r[-1] * inv % l
                off = len(r) - len(r1)
                q[off] = c
                for i in range(len(r1)):
                    r[off + i] = (r[off + i] - c * r1[i]) % l
                r.pop()
            qt = _poly_trim(q)
            r0, r1 = r1, _poly_trim(r)
            s0, s1 = s1, _poly_trim([(a - b) % l for a, b in itertools.zip_longest(
                s0, _poly_mul(qt, s1, l), fillvalue=0)])
        # r0 is a unit constant times gcd = constant
        c_inv = pow(r0[0], -1, l)
        res = tuple(a * c_inv % l for a in s0)
        return self.field(list(res))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        f = self.field
        red = _poly_powmod(self.coeffs, n, f.modulus, f.l)
        return f(list(red))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExtFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.l, self.field.k, self.coeffs))

    def __repr__(self):
        return f"({', '.join(str(c) for c in self.coeffs)})"


def field_sqrt(a):
    """A square root of a in its finite field, or None when a is a nonsquare.

    Tonelli-Shanks over any odd-order field; nonsquares are located by a
    deterministic scan in enumeration order.
    """
    field = a.field
    q = field.order
    if q % 2 == 0:
        raise InvalidFieldError("square roots implemented for odd-order fields only")
    if a.is_zero():
        return field.zero() if isinstance(field, ExtField) else field(0)
    one = field.one()
    if a ** ((q - 1) // 2) != one:
        return None
    if q % 4 == 3:
        return a ** ((q + 1) // 4)
    # write q - 1 = 2^s * m with m odd
    m, s = q - 1, 0
    while m % 2 == 0:
        m //= 2
        s += 1
    z = None
    for i in range(2, q):
        cand = field.element_from_index(i)
        if cand.is_zero():
            continue
        if cand ** ((q - 1) // 2) != one:
            z = cand
            break
    c = z ** m
    t = a ** m
    r = a ** ((m + 1) // 2)
    e = s
    while t != one:
        # find least i with t^(2^i) = 1
        i = 0
        t2 = t
        while t2 != one:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (e - i - 1))
        r = r * b
        c = b * b
        t = t * c
        e = i
    return r


def discrete_log(base, value, order=None):
    """The exponent e in [0, order) with base^e = value, by direct scan.

    base must have exact multiplicative order `order` (a prime in every use
    here); when order is None it is measured by scanning powers of base.
    """
    one = base ** 0
    if order is None:
        order = 1
        acc = base
        while acc != one:
            acc = acc * base
            order += 1
            if order > 10 ** 6:
                raise NotInSubgroupError("base order exceeds scan bound")
    else:
        if base == one or base ** order != one:
            raise NotInSubgroupError(f"base does not have exact order {order}")
    acc = one
    for e in range(order):
        if acc == value:
            return e
        acc = acc * base
    raise NotInSubgroupError("value is not a power of base")


# ---------------------------------------------------------------------------
# cyclotomic numbers


@functools.lru_cache(maxsize=None)
def _prime_power_split(m):
    """CRT data for Z/m: tuples (p, p^a, phi(p^a), idempotent u with
    u = 1 mod p^a and u = 0 mod m/p^a)."""
    parts = []
    for p, a in sorted(factorize(m).items()):
        pp = p ** a
        rest = m // pp
        # u = rest * (rest^-1 mod pp)
        u = rest * pow(rest, -1, pp) % m
        parts.append((p, pp, pp - pp // p, u))
    return tuple(parts)


@functools.lru_cache(maxsize=None)
def _monomial_expansion(m, e):
    """Rewrite x^e as a signed sum of basis monomials modulo the m-th
    cyclotomic polynomial.

    The basis is the tensor product over prime powers p^a || m of the power
    bases {zeta^i : i < phi(p^a)}; one relation per prime power
    (sum of the p equally spaced p^a-th roots is 0) rewrites any exponent in
    a single step.
    """
    if m == 1:
        return ((0, 1),)
    parts = _prime_power_split(m)
    per_coord = []
    sign = 1
    for p, pp, phi, u in parts:
        a = e % pp
        if a < phi:
            per_coord.append((a,))
        else:
            step = pp // p
            s = a - phi
            per_coord.append(tuple(s + j * step for j in range(p - 1)))
            sign = -sign
    out = []
    for combo in itertools.product(*per_coord):
        e2 = 0
        for (p, pp, phi, u), a in zip(parts, combo):
            e2 += a * u
        out.append((e2 % m, sign))
    return tuple(out)


def _as_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CyclotomicNumber:
    """An element of Q[x]/(x^m - 1) interpreted in Q(zeta_m), zeta_m = e^(2 pi i / m).

    Stored as a sparse dict exponent -> coefficient (int or Fraction).
    Equality means congruence modulo the m-th cyclotomic polynomial, decided
    by reducing into the tensor power basis; no floats are involved.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs=None):
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self.modulus = modulus
        out = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
            for e, c in items:
                if c:
                    e %= modulus
                    c2 = out.get(e, 0) + c
                    if c2:
                        out[e] = _as_coeff(c2)
                    else:
                        out.pop(e, None)
        self.coeffs = out

    # -- constructors

    @classmethod
    def from_rational(cls, r, modulus=1):
        return cls(modulus, {0: Fraction(r)})

    @classmethod
    def zero(cls, modulus=1):
        return cls(modulus, {})

    @classmethod
    def one(cls, modulus=1):
        return cls(modulus, {0: 1})

    @classmethod
    def root_of_unity(cls, modulus, k=1):
        return cls(modulus, {k % modulus: 1})

    # -- modulus management

    def lift(self, m2):
        """Rewrite in Q[x]/(x^m2 - 1) for a multiple m2 of the modulus."""
        if m2 == self.modulus:
            return self
        if m2 % self.modulus:
            raise ValueError(f"{m2} is not a multiple of {self.modulus}")
        t = m2 // self.modulus
        return CyclotomicNumber(m2, {e * t: c for e, c in self.coeffs.items()})

    def _pair(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.modulus == self.modulus:
                return self, other
            m = math.lcm(self.modulus, other.modulus)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber(self.modulus, {0: other})
        return None

    # -- ring operations

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = _as_coeff(c2)
            else:
                out.pop(e, None)
        res = CyclotomicNumber.zero(a.modulus)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = CyclotomicNumber.zero(self.modulus)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CyclotomicNumber.zero(self.modulus)
            res = CyclotomicNumber.zero(self.modulus)
            res.coeffs = {e: _as_coeff(c * other) for e, c in self.coeffs.items()}
            return res
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        m = a.modulus
        out = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                if e >= m:
                    e -= m
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        res = CyclotomicNumber.zero(m)
        res.coeffs = {e: _as_coeff(c) for e, c in out.items()}
        return res

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by rationals only; general inverses are out of scope
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = CyclotomicNumber.one(self.modulus)
        base = self
        while n:
            if n & 1:
                result = (result * base).compact()
            base = (base * base).compact()
            n >>= 1
        return result

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^(-1)."""
        m = self.modulus
        res = CyclotomicNumber.zero(m)
        res.coeffs = {(-e) % m: c for e, c in self.coeffs.items()}
        return res

    # -- canonical form and predicates

    def reduced(self):
        """Coefficients on the tensor power basis of Q(zeta_m); canonical."""
        out = {}
        m = self.modulus
        for e, c in self.coeffs.items():
            for e2, s in _monomial_expansion(m, e):
                c2 = out.get(e2, 0) + (c if s > 0 else -c)
                if c2:
                    out[e2] = _as_coeff(c2)
                else:
                    out.pop(e2, None)
        return out

    def compact(self):
        """An equal value whose stored support lies in the reduced basis."""
        res = CyclotomicNumber.zero(self.modulus)
        res.coeffs = self.reduced()
        return res

    def is_zero(self):
        return not self.reduced()

    def rational_value(self):
        """The value as a Fraction when it lies in Q, else None."""
        red = self.reduced()
        if not red:
            return Fraction(0)
        if set(red) == {0}:
            return Fraction(red[0])
        return None

    def rational_root_of_unity(self):
        """(r, k) with self = r * zeta_m^k and r rational, or None."""
        m = self.modulus
        shifted = self
        for k in range(m):
            r = shifted.rational_value()
            if r is not None and r != 0:
                return r, k
            # divide by one more power of zeta
            shifted = shifted * CyclotomicNumber.root_of_unity(m, m - 1)
        r = self.rational_value()
        if r == 0:
            return Fraction(0), 0
        return None

    def embed(self):
        """Complex value under zeta_m -> exp(2 pi i / m); for magnitudes only."""
        m = self.modulus
        return sum(complex(c) * cmath.exp(2j * cmath.pi * e / m) for e, c in self.coeffs.items())

    def dense_reduced_coeffs(self):
        """Length-m list of Fractions on the canonical basis (zeros elsewhere)."""
        red = self.reduced()
        return [Fraction(red.get(e, 0)) for e in range(self.modulus)]

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.coeffs == b.coeffs:
            return True
        return (a - b).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*z{self.modulus}^{e}")
        return " + ".join(parts)
