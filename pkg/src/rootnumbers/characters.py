"""Multiplicative and additive characters, Gauss sums, and tame epsilon factors.

Conventions, fixed once and used everywhere:

* A character of F_q^* is recorded by its exponent on the smallest primitive
  root g mod q; its values land in the group of d-th roots of unity where
  d = (q-1)/gcd(e, q-1).
* A character of Q_q^* doubles as a character of the local Weil group via the
  class field theory map that sends a uniformizer to an inverse Frobenius.
  Its data: the value at the uniformizer (possibly a formal unit symbol),
  the restriction to units (a character mod q, tame only), and hence a
  conductor exponent of 0 or 1.  Higher conductors are rejected.
* Additive characters are psi_c = psi(c x) with c a unit, level n(psi) = 0.
  Haar measure is normalized so that the integers have volume 1.  With this
  normalization, an unramified character has epsilon factor exactly 1, and a
  tame ramified character mu has

      eps(mu, psi_c, dx) = mu(c) * mu(q) * G(mu^{-1})

  with G the Gauss sum over F_q against e^(2 pi i b / q).
"""

import functools
import math
from fractions import Fraction

from .errors import (FormalUnitError, InvalidFieldError, UnsupportedConductorError,
                     ZeroArgumentError)
from .fields import (CyclotomicNumber, dlog_table, factorize, is_prime,
                     legendre_symbol)


class MultiplicativeCharacter:
    """A character of F_q^*, determined by its exponent on the fixed generator."""

    __slots__ = ("q", "exponent")

    def __init__(self, q, exponent):
        if not is_prime(q):
            raise InvalidFieldError(f"{q} is not prime")
        self.q = q
        self.exponent = exponent % (q - 1) if q > 2 else 0

    @classmethod
    def trivial(cls, q):
        return cls(q, 0)

    @classmethod
    def legendre(cls, q):
        """The quadratic residue character mod an odd prime q."""
        if q == 2:
            raise InvalidFieldError("no quadratic character mod 2")
        return cls(q, (q - 1) // 2)

    @property
    def order(self):
        if self.q == 2:
            return 1
        return (self.q - 1) // math.gcd(self.exponent, self.q - 1)

    def is_trivial(self):
        return self.exponent == 0

    def __mul__(self, other):
        if not isinstance(other, MultiplicativeCharacter):
            return NotImplemented
        if other.q != self.q:
            raise InvalidFieldError("characters of different prime fields")
        return MultiplicativeCharacter(self.q, self.exponent + other.exponent)

    def inverse(self):
        return MultiplicativeCharacter(self.q, -self.exponent)

    def __pow__(self, n):
        return MultiplicativeCharacter(self.q, self.exponent * n)

    def __eq__(self, other):
        return (isinstance(other, MultiplicativeCharacter)
                and (other.q, other.exponent) == (self.q, self.exponent))

    def __hash__(self):
        return hash(("MultChar", self.q, self.exponent))

    def value_exponent(self, x):
        """j with chi(x) = zeta_d^j, where d is the order of the character."""
        x = int(x) % self.q
        if x == 0:
            raise ZeroArgumentError("character evaluated at 0")
        k = dlog_table(self.q)[x]
        d = self.order
        n = self.q - 1
        g0 = n // d
        ered = (self.exponent // g0) % d if d > 1 else 0
        return (ered * k) % d if d > 1 else 0

    def __call__(self, x):
        d = self.order
        return CyclotomicNumber.root_of_unity(d, self.value_exponent(x))

    def sign_at(self, x):
        """Value as an int for characters of order <= 2."""
        if self.order > 2:
            raise ValueError("sign_at needs a character of order <= 2")
        return -1 if self.value_exponent(x) else 1

    def __repr__(self):
        return f"chi_{self.q}^({self.exponent})"


def char_eval(chi, x, strict=False):
    """chi(x) as a CyclotomicNumber; x = 0 gives 0 unless strict."""
    if int(x) % chi.q == 0:
        if strict:
            raise ZeroArgumentError("character evaluated at 0 in strict mode")
        return CyclotomicNumber.zero(chi.order)
    return chi(x)


@functools.lru_cache(maxsize=None)
def _gauss_sum_cached(q, exponent):
    chi = MultiplicativeCharacter(q, exponent)
    d = chi.order
    m = q * d
    coeffs = {}
    # G = sum over b in F_q^* of chi(b) * zeta_q^b, assembled in Q(zeta_{qd})
    table = dlog_table(q)
    n = q - 1
    g0 = n // d
    ered = (chi.exponent // g0) % d if d > 1 else 0
    for b in range(1, q):
        j = (ered * table[b]) % d if d > 1 else 0
        e = (q * j + d * b) % m
        coeffs[e] = coeffs.get(e, 0) + 1
    return CyclotomicNumber(m, coeffs)


def gauss_sum(chi):
    """G(chi) = sum_{b in F_q^*} chi(b) e^(2 pi i b / q), exactly in Q(zeta_{qd})."""
    if chi.q == 2:
        raise InvalidFieldError("Gauss sums are taken over odd prime fields")
    return _gauss_sum_cached(chi.q, chi.exponent)


class FormalProduct:
    """A rational number times a monomial in formal unit symbols.

    Used for uniformizer values that the construction leaves free: nothing
    downstream may evaluate them, only multiply, invert, and compare.
    """

    __slots__ = ("coeff", "symbols")

    def __init__(self, coeff=1, symbols=()):
        self.coeff = Fraction(coeff)
        if self.coeff == 0:
            raise ValueError("unit values cannot vanish")
        if isinstance(symbols, dict):
            symbols = symbols.items()
        merged = {}
        for name, exp in symbols:
            merged[name] = merged.get(name, 0) + exp
        self.symbols = tuple(sorted((n, e) for n, e in merged.items() if e))

    @classmethod
    def symbol(cls, name):
        return cls(1, ((name, 1),))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FormalProduct(other)
        if not isinstance(other, FormalProduct):
            return NotImplemented
        return FormalProduct(self.coeff * other.coeff, self.symbols + other.symbols)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n == 0:
            return FormalProduct(1)
        coeff = self.coeff ** n if n > 0 else Fraction(1) / (self.coeff ** (-n))
        return FormalProduct(coeff, tuple((name, e * n) for name, e in self.symbols))

    def inverse(self):
        return self ** (-1)

    def is_concrete(self):
        return not self.symbols

    def as_fraction(self):
        if self.symbols:
            raise FormalUnitError(f"formal unit value {self} used where a number is needed")
        return self.coeff

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return not self.symbols and self.coeff == other
        return (isinstance(other, FormalProduct)
                and (other.coeff, other.symbols) == (self.coeff, self.symbols))

    def __hash__(self):
        return hash((self.coeff, self.symbols))

    def __repr__(self):
        if not self.symbols:
            return str(self.coeff)
        body = "*".join(f"{n}^{e}" if e != 1 else n for n, e in self.symbols)
        return f"{self.coeff}*{body}" if self.coeff != 1 else body


class LocalCharacter:
    """A tame character of Q_q^*: uniformizer value, unit restriction, conductor."""

    __slots__ = ("q", "uniformizer_value", "ramified_part")

    def __init__(self, q, uniformizer_value=1, ramified_part=None, conductor=None):
        if not is_prime(q):
            raise InvalidFieldError(f"{q} is not prime")
        self.q = q
        if not isinstance(uniformizer_value, FormalProduct):
            uniformizer_value = FormalProduct(uniformizer_value)
        self.uniformizer_value = uniformizer_value
        if ramified_part is not None and ramified_part.is_trivial():
            ramified_part = None
        if ramified_part is not None and ramified_part.q != q:
            raise InvalidFieldError("unit character lives over a different prime")
        self.ramified_part = ramified_part
        if conductor is not None and conductor != self.conductor:
            raise UnsupportedConductorError(
                f"requested conductor {conductor}; only 0 and 1 are representable")

    @classmethod
    def unramified(cls, q, value):
        return cls(q, value)

    @classmethod
    def unramified_symbol(cls, q, name):
        return cls(q, FormalProduct.symbol(name))

    @classmethod
    def omega(cls, q):
        """The unramified character sending an inverse Frobenius to 1/q."""
        return cls(q, Fraction(1, q))

    @classmethod
    def tame(cls, q, unit_character, uniformizer_value=1):
        return cls(q, uniformizer_value, unit_character)

    @property
    def conductor(self):
        return 0 if self.ramified_part is None else 1

    def is_unramified(self):
        return self.ramified_part is None

    def __mul__(self, other):
        if not isinstance(other, LocalCharacter):
            return NotImplemented
        if other.q != self.q:
            raise InvalidFieldError("local characters at different primes")
        ram = self.ramified_part
        if other.ramified_part is not None:
            ram = other.ramified_part if ram is None else ram * other.ramified_part
        return LocalCharacter(self.q, self.uniformizer_value * other.uniformizer_value, ram)

    def inverse(self):
        ram = None if self.ramified_part is None else self.ramified_part.inverse()
        return LocalCharacter(self.q, self.uniformizer_value.inverse(), ram)

    def __pow__(self, n):
        ram = None if self.ramified_part is None else self.ramified_part ** n
        return LocalCharacter(self.q, self.uniformizer_value ** n, ram)

    def __eq__(self, other):
        if not isinstance(other, LocalCharacter):
            return NotImplemented
        ram_a = self.ramified_part.exponent if self.ramified_part else 0
        ram_b = other.ramified_part.exponent if other.ramified_part else 0
        return (self.q, self.uniformizer_value, ram_a) == (other.q, other.uniformizer_value, ram_b)

    def __hash__(self):
        ram = self.ramified_part.exponent if self.ramified_part else 0
        return hash((self.q, self.uniformizer_value, ram))

    def eval_rational(self, x):
        """Value at a nonzero rational x embedded in Q_q^*, as a CyclotomicNumber.

        Requires a concrete uniformizer value.  The unit restriction is applied
        to the unit part of x mod q.
        """
        x = Fraction(x)
        if x == 0:
            raise ZeroArgumentError("local character evaluated at 0")
        q = self.q
        num, den = x.numerator, x.denominator
        v = 0
        while num % q == 0:
            num //= q
            v += 1
        while den % q == 0:
            den //= q
            v -= 1
        uval = self.uniformizer_value.as_fraction() ** v
        out = CyclotomicNumber.from_rational(uval)
        if self.ramified_part is not None:
            unit = num * pow(den, -1, q) % q
            out = out * self.ramified_part(unit)
        return out

    def __repr__(self):
        ram = "" if self.ramified_part is None else f", units->{self.ramified_part!r}"
        return f"LocalCharacter(q={self.q}, pi->{self.uniformizer_value!r}{ram})"


class AdditiveCharacter:
    """psi_c(x) = e^(2 pi i c x / q) on Q_q, level 0; c is a unit mod q."""

    __slots__ = ("q", "c")

    def __init__(self, q, c=1):
        if not is_prime(q):
            raise InvalidFieldError(f"{q} is not prime")
        if int(c) % q == 0:
            raise ValueError("the twisting unit c must be nonzero mod q")
        self.q = q
        self.c = int(c) % q

    @property
    def level(self):
        return 0

    def __repr__(self):
        return f"psi_{self.q}(c={self.c})"


class HaarMeasure:
    """Haar measure on Q_q giving the integers volume 1 (the only one used)."""

    __slots__ = ("q",)

    def __init__(self, q, unit_volume=1):
        if unit_volume != 1:
            raise ValueError("only the volume-1 normalization is supported")
        self.q = q

    def __repr__(self):
        return f"dx_{self.q}(vol=1)"


def eps_character(mu, psi=None, dx=None):
    """Epsilon factor of a tame character of Q_q^* against psi_c and dx.

    Unramified characters give exactly 1 (the additive level is 0 and the
    measure is self-dual there).  A ramified tame character gives
    mu(c) * mu(q) * G(mu_unit^{-1}).
    """
    q = mu.q
    if psi is None:
        psi = AdditiveCharacter(q)
    if psi.q != q:
        raise InvalidFieldError("additive character at a different prime")
    if dx is not None and dx.q != q:
        raise InvalidFieldError("measure at a different prime")
    if mu.is_unramified():
        return CyclotomicNumber.one()
    unit_char = mu.ramified_part
    uval = mu.uniformizer_value.as_fraction()
    val = unit_char(psi.c) * uval
    return val * gauss_sum(unit_char.inverse())


def eps_unramified_twist(eps_base, mu_unramified, conductor_exponent, dim=1):
    """Epsilon factor after twisting by an unramified character.

    With the additive level fixed at 0, twisting a representation of
    conductor exponent a by unramified mu multiplies the epsilon factor by
    mu(q)^a; the dimension term would enter only at nonzero additive level.
    """
    if not mu_unramified.is_unramified():
        raise ValueError("the twisting character must be unramified")
    scale = mu_unramified.uniformizer_value ** conductor_exponent
    return eps_base * scale.as_fraction()


# ---------------------------------------------------------------------------
# the family of local characters attached to the quadratic character mod p


class HeckeCharacterFamily:
    """All local components of the idele class character lifting (./p).

    chi_infinity is a sign, chi_l for l != p is unramified with value (l/p)
    at l, and chi_p is tame with unit restriction (./p) and value 1 at p.
    The defining property, checked by hecke_product_check, is that the
    product of all components is 1 on every nonzero rational.
    """

    def __init__(self, p):
        if p == 2 or not is_prime(p):
            raise InvalidFieldError(f"need an odd prime, got {p}")
        self.p = p
        self.chi_minus_one = legendre_symbol(-1, p)

    def infinity(self, x):
        """The archimedean component: a sign depending on chi(-1) and sgn(x)."""
        x = Fraction(x)
        if x == 0:
            raise ZeroArgumentError("sign character evaluated at 0")
        if self.chi_minus_one == 1:
            return 1
        return 1 if x > 0 else -1

    def local(self, l):
        if l == self.p:
            return LocalCharacter.tame(self.p, MultiplicativeCharacter.legendre(self.p), 1)
        return LocalCharacter.unramified(l, legendre_symbol(l, self.p))

    def component_value(self, v, x):
        """Value of the component at the place v ('oo' or a prime) on rational x."""
        if v == "oo":
            return CyclotomicNumber.from_rational(self.infinity(x))
        return self.local(v).eval_rational(x)


def hecke_lift(p):
    return HeckeCharacterFamily(p)


def hecke_product_check(family, x):
    """Product of all local values on a nonzero rational; equals 1 identically."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgumentError("product formula evaluated at 0")
    out = family.component_value("oo", x)
    support = set(factorize(abs(x.numerator))) | set(factorize(x.denominator)) | {family.p}
    for l in sorted(support):
        out = out * family.component_value(l, x)
    return out
