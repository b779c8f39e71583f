"""Monomial Weil-Deligne representations and their local constants.

A representation here is a direct sum of tame characters of Q_q^* together
with an integer nilpotent matrix N acting on the chosen basis, subject to the
compatibility N[i][j] != 0  =>  summand_i = summand_j * omega_q, where
omega_q is unramified with value 1/q at a uniformizer.  This covers
characters, the special representation sp(2), and all tensor combinations
used here, while keeping every computation exact:

* delta: the determinant of minus an inverse Frobenius on
  V^I / (V^I intersect ker N), computed on the coordinates singled out by
  the pivot columns of N restricted to the inertia invariants.
* conductor: sum of the summand conductors plus the dimension of that
  same quotient.
* epsilon: the product of the summand epsilon factors (additive level 0).
* epsilon' = epsilon * delta, and the root number epsilon' / |epsilon'|.
"""

import math
from fractions import Fraction

from .errors import (FormalUnitError, IdentityViolationError, InvalidFieldError,
                     NumericInstabilityError)
from .fields import CyclotomicNumber
from .characters import (AdditiveCharacter, FormalProduct, HaarMeasure,
                         LocalCharacter, eps_character)


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _is_nilpotent(n_mat):
    size = len(n_mat)
    acc = n_mat
    for _ in range(size):
        if all(all(x == 0 for x in row) for row in acc):
            return True
        acc = _mat_mul(acc, n_mat)
    return all(all(x == 0 for x in row) for row in acc)


def _pivot_columns(rows):
    """Pivot column indices of a rational matrix, scanning columns left to right."""
    if not rows:
        return []
    mat = [[Fraction(x) for x in row] for row in rows]
    nrow, ncol = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(ncol):
        pivot = None
        for i in range(r, nrow):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrow):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrow:
            break
    return pivots


class WDRep:
    """A monomial Weil-Deligne representation at the prime q."""

    __slots__ = ("q", "summands", "n_matrix")

    def __init__(self, q, summands, n_matrix=None):
        summands = tuple(summands)
        if not summands:
            raise ValueError("a representation needs at least one summand")
        for s in summands:
            if not isinstance(s, LocalCharacter) or s.q != q:
                raise InvalidFieldError("summands must be local characters at q")
        dim = len(summands)
        if n_matrix is None:
            n_matrix = [[0] * dim for _ in range(dim)]
        n_matrix = tuple(tuple(int(x) for x in row) for row in n_matrix)
        if len(n_matrix) != dim or any(len(row) != dim for row in n_matrix):
            raise ValueError("monodromy matrix shape does not match the summands")
        if not _is_nilpotent([list(r) for r in n_matrix]):
            raise ValueError("monodromy matrix is not nilpotent")
        omega = LocalCharacter.omega(q)
        for i in range(dim):
            for j in range(dim):
                if n_matrix[i][j] and summands[i] != summands[j] * omega:
                    raise ValueError(
                        f"N[{i}][{j}] != 0 but summand {i} is not summand {j} twisted by omega")
        self.q = q
        self.summands = summands
        self.n_matrix = n_matrix

    @property
    def dim(self):
        return len(self.summands)

    def has_monodromy(self):
        return any(any(row) for row in self.n_matrix)

    def __repr__(self):
        return f"WDRep(q={self.q}, dim={self.dim}, N{'!=' if self.has_monodromy() else '='}0)"


def wd_character(chi):
    """The one-dimensional representation attached to a local character."""
    return WDRep(chi.q, [chi])


def wd_sp2(q):
    """sp(2): summands (1, omega_q) with N sending basis 0 to basis 1."""
    triv = LocalCharacter.unramified(q, 1)
    return WDRep(q, [triv, LocalCharacter.omega(q)], [[0, 0], [1, 0]])


def wd_sum(r1, r2):
    if r1.q != r2.q:
        raise InvalidFieldError("direct sum needs representations at the same prime")
    d1, d2 = r1.dim, r2.dim
    n = [[0] * (d1 + d2) for _ in range(d1 + d2)]
    for i in range(d1):
        for j in range(d1):
            n[i][j] = r1.n_matrix[i][j]
    for i in range(d2):
        for j in range(d2):
            n[d1 + i][d1 + j] = r2.n_matrix[i][j]
    return WDRep(r1.q, r1.summands + r2.summands, n)


def wd_tensor(r1, r2, *rest):
    """Tensor product; summands in lexicographic order, N by the Leibniz rule."""
    if r1.q != r2.q:
        raise InvalidFieldError("tensor needs representations at the same prime")
    d1, d2 = r1.dim, r2.dim
    summands = [a * b for a in r1.summands for b in r2.summands]
    dim = d1 * d2
    n = [[0] * dim for _ in range(dim)]
    for i1 in range(d1):
        for j1 in range(d1):
            v = r1.n_matrix[i1][j1]
            if v:
                for k in range(d2):
                    n[i1 * d2 + k][j1 * d2 + k] += v
    for i2 in range(d2):
        for j2 in range(d2):
            v = r2.n_matrix[i2][j2]
            if v:
                for k in range(d1):
                    n[k * d2 + i2][k * d2 + j2] += v
    out = WDRep(r1.q, summands, n)
    for r in rest:
        out = wd_tensor(out, r)
    return out


def wd_twist(rep, chi):
    """Twist every summand by the local character chi; N is unchanged."""
    if chi.q != rep.q:
        raise InvalidFieldError("twisting character at a different prime")
    return WDRep(rep.q, [s * chi for s in rep.summands], rep.n_matrix)


def inertia_invariants(rep):
    """Indices of summands on which inertia acts trivially."""
    return tuple(i for i, s in enumerate(rep.summands) if s.is_unramified())


class DeltaQuotientReport:
    """How the delta factor was computed: which coordinates survived."""

    __slots__ = ("invariant_indices", "quotient_indices", "kernel_intersection_dim", "delta")

    def __init__(self, invariant_indices, quotient_indices, kernel_intersection_dim, delta):
        self.invariant_indices = invariant_indices
        self.quotient_indices = quotient_indices
        self.kernel_intersection_dim = kernel_intersection_dim
        self.delta = delta

    def delta_value(self):
        return self.delta.as_fraction()

    def __repr__(self):
        return (f"DeltaQuotientReport(invariants={self.invariant_indices}, "
                f"quotient={self.quotient_indices}, delta={self.delta!r})")


def delta_factor(rep):
    """det(-Phi) on V^I/(V^I ker N), with Phi an inverse Frobenius.

    N preserves the inertia invariants, so the quotient is computed from the
    restricted matrix; its pivot columns (lowest index first) name coordinates
    spanning a complement of the kernel, and -Phi is diagonal there with
    entries -u_j.  Formal unit values pass through symbolically.
    """
    inv = inertia_invariants(rep)
    sub = [[rep.n_matrix[i][j] for j in inv] for i in inv]
    pivots = _pivot_columns(sub)
    quotient = tuple(inv[c] for c in pivots)
    delta = FormalProduct(1)
    for j in quotient:
        delta = delta * (rep.summands[j].uniformizer_value * Fraction(-1))
    return DeltaQuotientReport(inv, quotient, len(inv) - len(pivots), delta)


def wd_conductor(rep):
    """a(rep) = sum of summand conductors + dim V^I/(V^I ker N)."""
    report = delta_factor(rep)
    return sum(s.conductor for s in rep.summands) + len(report.quotient_indices)


def epsilon_weil(rep, psi=None, dx=None):
    """Epsilon factor of the underlying sum of characters (no delta)."""
    if psi is None:
        psi = AdditiveCharacter(rep.q)
    if dx is None:
        dx = HaarMeasure(rep.q)
    out = CyclotomicNumber.one()
    for s in rep.summands:
        out = (out * eps_character(s, psi, dx)).compact()
    return out


def epsilon_prime(rep, psi=None, dx=None):
    """epsilon'(rep) = epsilon(rep) * delta(rep)."""
    eps = epsilon_weil(rep, psi, dx)
    report = delta_factor(rep)
    if not report.delta.is_concrete():
        raise FormalUnitError(
            "delta carries a formal unit; epsilon' is undetermined for this input")
    return eps * report.delta.as_fraction()


def local_root_number(rep, psi=None, dx=None):
    """epsilon' / |epsilon'|, exact whenever epsilon' is rational times a root
    of unity or has rational |epsilon'|^2 with a rational square root."""
    val = epsilon_prime(rep, psi, dx)
    r = val.rational_value()
    if r is not None:
        if r == 0:
            raise IdentityViolationError("epsilon' vanished; representations here never allow it")
        return CyclotomicNumber.from_rational(1 if r > 0 else -1)
    pair = val.rational_root_of_unity()
    if pair is not None:
        r, k = pair
        sign = 1 if r > 0 else -1
        return CyclotomicNumber.root_of_unity(val.modulus, k) * sign
    norm = (val * val.conjugate()).rational_value()
    if norm is not None and norm > 0:
        num, den = norm.numerator, norm.denominator
        rn, rd = _exact_isqrt(num), _exact_isqrt(den)
        if rn is not None and rd is not None:
            return val / Fraction(rn, rd)
    conj = val.conjugate()
    if val == conj:
        # real: the normalized value is the sign, read off far from zero
        e = val.embed().real
        if abs(e) > 1e-6:
            return CyclotomicNumber.from_rational(1 if e > 0 else -1)
    if val == -conj:
        # purely imaginary: normalizes to +-i (a Gauss sum at q = 3 mod 4)
        e = val.embed().imag
        if abs(e) > 1e-6:
            return CyclotomicNumber.root_of_unity(4, 1 if e > 0 else 3)
    mag = abs(val.embed())
    if mag < 1e-9:
        raise NumericInstabilityError("epsilon' magnitude below tolerance")
    raise NumericInstabilityError(
        "epsilon' is not rational times a root of unity; no exact normalization available")


def _exact_isqrt(n):
    r = math.isqrt(n)
    return r if r * r == n else None
