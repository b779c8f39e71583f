"""Root numbers and conductors of triple products of prime-level eigenforms.

A run is described by an odd prime p and the three eigenvalue signs
(a_1, a_2, a_3) of the forms at p, optionally twisted by the quadratic
character mod p.  Local pieces:

* at p: the triple tensor of sp(2) twisted by lambda * omega^{-3} and, in the
  twisted case, additionally by the tame quadratic character; lambda is
  unramified with value a_1 a_2 a_3 at a uniformizer.
* at q != p: the tensor of three unramified sums xi + xi^{-1} omega^{-1}
  (xi a formal unit) twisted by the unramified quadratic value (q/p); the
  monodromy vanishes, so epsilon' = 1 there without ever evaluating xi.
* at infinity: the discrete-series factor contributes the constant -1 for
  this Hodge type, twisted or not, and -1 for a single weight-2 form.

The global root number is the product over all places; only finitely many
places contribute anything but 1, and a sample of inert primes is computed
explicitly rather than assumed.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdentityViolationError, InvalidFieldError
from .fields import is_prime, legendre_symbol
from .characters import (AdditiveCharacter, HaarMeasure, LocalCharacter,
                         MultiplicativeCharacter)
from .weildeligne import (WDRep, delta_factor, epsilon_weil, local_root_number,
                          wd_conductor, wd_sp2, wd_tensor, wd_twist)

# archimedean root numbers: Hodge types (3,0)+(2,1)^3 and (1,0) both give -1,
# and a quadratic twist does not change the archimedean component
W_INFINITY_TRIPLE = -1
W_INFINITY_FORM = -1

# primes p where X_0(p) has positive genus (prime level, p odd)
_GENUS_ZERO = {2, 3, 5, 7, 13}

DEFAULT_SAMPLE_PRIMES = (2, 3, 5, 7, 11, 13)


def genus_positive(p):
    return p not in _GENUS_ZERO


@dataclass(frozen=True)
class TripleProductSpec:
    """Level p, eigenvalue signs at p, and whether the quadratic twist is on."""

    p: int
    signs: tuple
    twisted: bool = False

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise InvalidFieldError(f"level must be an odd prime, got {self.p}")
        signs = tuple(self.signs)
        if len(signs) != 3 or any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be three values in {{1,-1}}, got {self.signs}")
        object.__setattr__(self, "signs", signs)

    @property
    def sign_product(self):
        return self.signs[0] * self.signs[1] * self.signs[2]

    def warnings(self):
        if not genus_positive(self.p):
            return [f"X_0({self.p}) has genus 0: no cuspforms of weight 2 and level {self.p}; "
                    "values are formal"]
        return []


def assemble_local(spec, q):
    """The Weil-Deligne representation of the (possibly twisted) triple at q."""
    p = spec.p
    if q == p:
        base = wd_tensor(wd_sp2(p), wd_sp2(p), wd_sp2(p))
        lam = LocalCharacter.unramified(p, spec.sign_product)
        omega_cubed_inv = LocalCharacter.omega(p) ** (-3)
        twist = lam * omega_cubed_inv
        if spec.twisted:
            twist = twist * LocalCharacter.tame(p, MultiplicativeCharacter.legendre(p), 1)
        return wd_twist(base, twist)
    if not is_prime(q):
        raise InvalidFieldError(f"{q} is not prime")
    factors = []
    for i in (1, 2, 3):
        xi = LocalCharacter.unramified_symbol(q, f"xi{i}_{q}")
        other = xi.inverse() * LocalCharacter.omega(q).inverse()
        factors.append(WDRep(q, [xi, other]))
    rep = wd_tensor(*factors)
    if spec.twisted:
        rep = wd_twist(rep, LocalCharacter.unramified(q, legendre_symbol(q, p)))
    return rep


@dataclass
class GlobalRootNumberReport:
    """All the local data entering W = W_oo * prod_q W_q."""

    spec: TripleProductSpec
    w_infinity: int
    local_w: dict
    w_global: int
    epsilon_p: Fraction
    delta_p: Fraction
    conductor_exponent: int
    sampled_primes: tuple


def _sign_of(cyclo):
    r = cyclo.rational_value()
    if r is None or abs(r) != 1:
        raise IdentityViolationError(f"root number did not normalize to a sign: {cyclo!r}")
    return 1 if r > 0 else -1


def global_root_number(spec, sample_primes=None):
    """The global root number, with every sampled local factor computed honestly."""
    p = spec.p
    if sample_primes is None:
        sample_primes = tuple(q for q in DEFAULT_SAMPLE_PRIMES if q != p)[:5]
    psi = AdditiveCharacter(p)
    dx = HaarMeasure(p)
    rep_p = assemble_local(spec, p)
    eps_p = epsilon_weil(rep_p, psi, dx)
    report_p = delta_factor(rep_p)
    w_p = _sign_of(local_root_number(rep_p, psi, dx))
    local_w = {p: w_p}
    for q in sample_primes:
        rep_q = assemble_local(spec, q)
        local_w[q] = _sign_of(local_root_number(rep_q, AdditiveCharacter(q), HaarMeasure(q)))
    w_global = W_INFINITY_TRIPLE
    for w in local_w.values():
        w_global *= w
    eps_p_rational = eps_p.rational_value()
    if eps_p_rational is None:
        raise IdentityViolationError("epsilon factor at p of a triple product must be rational")
    return GlobalRootNumberReport(
        spec=spec,
        w_infinity=W_INFINITY_TRIPLE,
        local_w=local_w,
        w_global=w_global,
        epsilon_p=eps_p_rational,
        delta_p=report_p.delta.as_fraction(),
        conductor_exponent=wd_conductor(rep_p),
        sampled_primes=tuple(sample_primes),
    )


def global_conductor(spec):
    """The conductor as an integer power of p (all other places are unramified)."""
    return spec.p ** wd_conductor(assemble_local(spec, spec.p))


@dataclass
class SingleFormReport:
    """Root numbers of one prime-level form, plain and twisted, from the machinery."""

    p: int
    a_p: int
    w_plain: int
    w_twisted: int
    conductor_exponent_plain: int
    conductor_exponent_twisted: int


def single_form_root_numbers(p, a_p):
    """W(f) and W(f, chi) for a weight-2 form of prime level p with a_p = +-1.

    Both come out of the same local machinery: the plain case is
    lambda omega^{-1} tensor sp(2); the twist multiplies in the tame quadratic
    character, and the archimedean constant is -1 either way.
    """
    if p == 2 or not is_prime(p):
        raise InvalidFieldError(f"level must be an odd prime, got {p}")
    if a_p not in (1, -1):
        raise ValueError(f"a_p must be +-1 at prime level, got {a_p}")
    lam = LocalCharacter.unramified(p, a_p)
    twist_plain = lam * LocalCharacter.omega(p).inverse()
    rep_plain = wd_twist(wd_sp2(p), twist_plain)
    w_plain = W_INFINITY_FORM * _sign_of(local_root_number(rep_plain))
    chi_p = LocalCharacter.tame(p, MultiplicativeCharacter.legendre(p), 1)
    rep_twisted = wd_twist(rep_plain, chi_p)
    w_twisted = W_INFINITY_FORM * _sign_of(local_root_number(rep_twisted))
    return SingleFormReport(
        p=p,
        a_p=a_p,
        w_plain=w_plain,
        w_twisted=w_twisted,
        conductor_exponent_plain=wd_conductor(rep_plain),
        conductor_exponent_twisted=wd_conductor(rep_twisted),
    )


@dataclass
class FunctionalEquationData:
    """Shape of the completed L-function: Lambda(s) = sign * Lambda(4 - s)."""

    center: int
    reflection: str
    sign: int
    conductor_base: int
    conductor_exponent: int
    gamma_factor: str
    completed_form: str

    def reflect(self, s):
        return 4 - s


def functional_equation_data(spec):
    report = global_root_number(spec)
    return FunctionalEquationData(
        center=2,
        reflection="s -> 4 - s",
        sign=report.w_global,
        conductor_base=spec.p,
        conductor_exponent=report.conductor_exponent,
        gamma_factor="2^4 * (2*pi)^(3-4s) * Gamma(s-1)^3 * Gamma(s)",
        completed_form="N^(s/2) * 2^4 * (2*pi)^(3-4s) * Gamma(s-1)^3 * Gamma(s) * L(s)",
    )
