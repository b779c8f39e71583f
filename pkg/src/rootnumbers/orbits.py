"""Group actions on triples of mod-p level structures.

States are triples (x_1, x_2, x_3) of nonzero row vectors in F_p^2.  SL_2(F_p)
acts on the right simultaneously on all three rows; the complete invariant on
the nondegenerate locus is the determinant triple

    Det(x) = (x_2 ^ x_3, x_3 ^ x_1, x_1 ^ x_2)      (2x2 determinants)

with values in F_p^3.  On determinant triples the diamond group (F_p^*)^3
acts by (d * c)_1 = d_2 d_3 c_1 (cyclically), the Galois scalars act
diagonally, and S_3 permutes the x_i, multiplying the determinant product by
the sign of the permutation.  The plus/minus classification is the quadratic
class of c_1 c_2 c_3.

The SL_2 orbit partition is computed exhaustively: states are integers below
p^6, the two generators act componentwise through precomputed permutation
arrays, and orbit labels are found by minimum-label propagation with pointer
jumping (a vectorized breadth-first sweep).  The same pass verifies, for every
state, that Det is constant on orbits and bijective on the nondegenerate part.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (GroupMembershipError, IdentityViolationError,
                     InvalidFieldError, ResourceLimitError)
from .fields import is_prime, legendre_symbol, primitive_root_int

S_GEN = ((0, -1), (1, 0))
T_GEN = ((1, 1), (0, 1))

DEFAULT_ORBIT_BOUND = 13


def _check_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise InvalidFieldError(f"need an odd prime, got {p}")


def _as_triple(t, p):
    out = []
    for pair in t:
        a, b = pair
        a, b = int(a) % p, int(b) % p
        if a == 0 and b == 0:
            raise ValueError("marking vectors must be nonzero")
        out.append((a, b))
    if len(out) != 3:
        raise ValueError("a marking triple has exactly three vectors")
    return tuple(out)


@dataclass(frozen=True)
class MarkingTriple:
    """Three nonzero row vectors over F_p."""

    p: int
    vectors: tuple

    def __post_init__(self):
        _check_odd_prime(self.p)
        object.__setattr__(self, "vectors", _as_triple(self.vectors, self.p))


def det_invariant(t, p=None):
    """Det(x) = (|x2 x3|, |x3 x1|, |x1 x2|) as a tuple in F_p^3."""
    if isinstance(t, MarkingTriple):
        p = t.p
        t = t.vectors
    t = _as_triple(t, p)
    (a1, b1), (a2, b2), (a3, b3) = t
    return ((a2 * b3 - a3 * b2) % p,
            (a3 * b1 - a1 * b3) % p,
            (a1 * b2 - a2 * b1) % p)


def classify_pm(t, p=None):
    """'plus', 'minus', or 'degenerate' by the quadratic class of the
    product of the three determinants."""
    if isinstance(t, MarkingTriple):
        p = t.p
    d1, d2, d3 = det_invariant(t, p)
    prod = d1 * d2 * d3 % p
    if prod == 0:
        return "degenerate"
    return "plus" if legendre_symbol(prod, p) == 1 else "minus"


def sl2_act(kappa, t, p=None):
    """Right action of kappa in SL_2(F_p) on all three rows."""
    if isinstance(t, MarkingTriple):
        p = t.p
        vecs = t.vectors
        wrap = True
    else:
        vecs = _as_triple(t, p)
        wrap = False
    (k11, k12), (k21, k22) = kappa
    if (k11 * k22 - k12 * k21) % p != 1:
        raise GroupMembershipError("matrix is not in SL_2 (determinant != 1)")
    out = tuple(((a * k11 + b * k21) % p, (a * k12 + b * k22) % p) for a, b in vecs)
    return MarkingTriple(p, out) if wrap else out


def s3_act(perm, t, p=None):
    """Permute the three rows; perm is a tuple image of (0,1,2)."""
    if isinstance(t, MarkingTriple):
        return MarkingTriple(t.p, tuple(t.vectors[i] for i in perm))
    vecs = _as_triple(t, p)
    return tuple(vecs[i] for i in perm)


def perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def diamond_act(d, c, p):
    """(d1,d2,d3) acting on a determinant triple (c1,c2,c3)."""
    d1, d2, d3 = (x % p for x in d)
    c1, c2, c3 = (x % p for x in c)
    if 0 in (d1, d2, d3):
        raise GroupMembershipError("diamond entries must be units")
    return (d2 * d3 * c1 % p, d1 * d3 * c2 % p, d1 * d2 * c3 % p)


def galois_act(i, c, p):
    """The scalar i in F_p^* acting diagonally on a determinant triple."""
    i %= p
    if i == 0:
        raise GroupMembershipError("Galois scalar must be a unit")
    return tuple(i * x % p for x in c)


# ---------------------------------------------------------------------------
# the exhaustive SL_2 orbit sweep


@dataclass
class OrbitTable:
    """Orbit decomposition of nonzero-vector triples under SL_2(F_p)."""

    p: int
    reps: list               # one representative triple per orbit
    sizes: list              # orbit sizes, same order
    dets: list               # Det value per orbit
    degenerate: list         # True when some determinant vanishes
    n_states: int            # (p^2 - 1)^3
    det_constant: bool       # Det constant on every orbit (checked on all states)
    det_bijective: bool      # Det injective on nondegenerate orbits, image (F_p^*)^3

    def n_orbits(self):
        return len(self.reps)

    def nondegenerate_orbits(self):
        return sum(1 for d in self.degenerate if not d)


def _pair_perm(p, mat):
    """Permutation of encoded pairs v = a*p + b under a generator (right action)."""
    (k11, k12), (k21, k22) = mat
    v = np.arange(p * p, dtype=np.int64)
    a, b = v // p, v % p
    a2 = (a * k11 + b * k21) % p
    b2 = (a * k12 + b * k22) % p
    return (a2 * p + b2).astype(np.int32)


def sl2_orbit_table(p, bound=DEFAULT_ORBIT_BOUND):
    """Exhaustive orbit partition of (F_p^2 - 0)^3 under diagonal right SL_2.

    Exceeding the bound raises ResourceLimitError; a failure of the pinned
    Det invariance raises IdentityViolationError instead of being recorded
    silently.
    """
    _check_odd_prime(p)
    if p > bound:
        raise ResourceLimitError(f"orbit enumeration bounded at p <= {bound}, got {p}")
    p2 = p * p
    n = p2 ** 3
    s_inv = ((0, 1), (-1, 0))
    t_inv = ((1, -1), (0, 1))
    perms = [_pair_perm(p, m) for m in (S_GEN, T_GEN, s_inv, t_inv)]
    x = np.arange(n, dtype=np.int32)
    v1 = x // (p2 * p2)
    rem = x % (p2 * p2)
    v2 = rem // p2
    v3 = rem % p2
    del rem
    maps = [(perm[v1] * p2 + perm[v2]) * p2 + perm[v3] for perm in perms]
    labels = x
    while True:
        new = labels
        for m in maps:
            new = np.minimum(new, labels[m])
        new = new[new]  # pointer jumping
        if np.array_equal(new, labels):
            break
        labels = new
    del maps
    valid = (v1 != 0) & (v2 != 0) & (v3 != 0)
    a1, b1 = v1 // p, v1 % p
    a2, b2 = v2 // p, v2 % p
    a3, b3 = v3 // p, v3 % p
    d1 = (a2 * b3 - a3 * b2) % p
    d2 = (a3 * b1 - a1 * b3) % p
    d3 = (a1 * b2 - a2 * b1) % p
    detkey = ((d1 * p + d2) * p + d3).astype(np.int64)
    lab_valid = labels[valid].astype(np.int64)
    det_valid = detkey[valid]
    reps_enc, first_idx, counts = np.unique(lab_valid, return_index=True, return_counts=True)
    pairs = np.unique(lab_valid * (p ** 3) + det_valid)
    det_constant = len(pairs) == len(reps_enc)
    if not det_constant:
        raise IdentityViolationError("Det is not constant on an SL_2 orbit")
    dmask = ((d1 != 0) & (d2 != 0) & (d3 != 0))[valid]
    nd_pairs = np.unique(lab_valid[dmask] * (p ** 3) + det_valid[dmask])
    nd_orbits = np.unique(lab_valid[dmask])
    nd_values = np.unique(det_valid[dmask])
    det_bijective = (len(nd_pairs) == len(nd_orbits) == len(nd_values) == (p - 1) ** 3)
    if not det_bijective:
        raise IdentityViolationError("Det is not a bijection on nondegenerate orbits")
    reps = []
    dets = []
    degenerate = []
    rep_det = det_valid[first_idx]  # reps_enc from np.unique is already sorted
    for idx in range(len(reps_enc)):
        enc = int(reps_enc[idx])
        w1, r1 = divmod(enc, p2 * p2)
        w2, w3 = divmod(r1, p2)
        reps.append(((w1 // p, w1 % p), (w2 // p, w2 % p), (w3 // p, w3 % p)))
        dk = int(rep_det[idx])
        e1, r2 = divmod(dk, p * p)
        e2, e3 = divmod(r2, p)
        dets.append((e1, e2, e3))
        degenerate.append(e1 == 0 or e2 == 0 or e3 == 0)
    sizes = [int(c) for c in counts]
    table = OrbitTable(
        p=p, reps=reps, sizes=sizes, dets=dets, degenerate=degenerate,
        n_states=(p2 - 1) ** 3, det_constant=det_constant, det_bijective=det_bijective)
    if sum(sizes) != table.n_states:
        raise IdentityViolationError("orbit sizes do not add up to the state count")
    return table


# ---------------------------------------------------------------------------
# diamond orbits, Galois, S_3


@dataclass
class DiamondReport:
    p: int
    orbit_sizes: list
    stabilizer: list          # stabilizer of (1,1,1)
    plus_orbit_is_squares: bool
    s3_behavior: str          # 'fixes' or 'swaps'


def diamond_orbit_decomposition(p):
    """Orbits of (F_p^*)^3 acting on determinant triples; exactly two, split
    by the quadratic class of the product."""
    _check_odd_prime(p)
    if p > 100:
        raise ResourceLimitError(f"diamond enumeration bounded at p <= 100, got {p}")
    g = primitive_root_int(p)
    gens = [(g, 1, 1), (1, g, 1), (1, 1, g)]
    start = (1, 1, 1)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for d in gens:
                c2 = diamond_act(d, c, p)
                if c2 not in seen:
                    seen.add(c2)
                    nxt.append(c2)
        frontier = nxt
    units = range(1, p)
    all_triples = {(a, b, c) for a in units for b in units for c in units}
    other = all_triples - seen
    squares = {t for t in all_triples if legendre_symbol(t[0] * t[1] * t[2], p) == 1}
    stab = [d for d in itertools.product(units, units, units)
            if diamond_act(d, start, p) == start]
    swap = s3_class_behavior(p)
    return DiamondReport(
        p=p,
        orbit_sizes=sorted((len(seen), len(other))),
        stabilizer=stab,
        plus_orbit_is_squares=(seen == squares),
        s3_behavior=swap,
    )


def s3_class_behavior(p):
    """'fixes' when transpositions preserve the quadratic class (p = 1 mod 4),
    'swaps' otherwise; decided by computing, not by the congruence."""
    base = ((1, 0), (0, 1), (1, 1))  # determinants (1, -1, -1): product 1, class plus
    d = det_invariant(base, p)
    prod = d[0] * d[1] * d[2] % p
    swapped = s3_act((1, 0, 2), base, p)
    d2 = det_invariant(swapped, p)
    prod2 = d2[0] * d2[1] * d2[2] % p
    same = legendre_symbol(prod, p) == legendre_symbol(prod2, p)
    return "fixes" if same else "swaps"


@dataclass
class FieldOfDefinitionReport:
    p: int
    radicand: int             # chi(-1) * p, the discriminant of the quadratic field
    field_label: str
    tau_swaps_classes: bool
    s3_behavior: str


def field_of_definition_report(p):
    """The quadratic field Q(sqrt(chi(-1) p)) carrying the two classes, with
    the Galois involution realized by a nonsquare scalar."""
    _check_odd_prime(p)
    radicand = legendre_symbol(-1, p) * p
    nonsquare = next(a for a in range(2, p) if legendre_symbol(a, p) == -1)
    plus_rep = (1, 1, 1)
    moved = galois_act(nonsquare, plus_rep, p)
    cls = legendre_symbol(moved[0] * moved[1] * moved[2], p)
    return FieldOfDefinitionReport(
        p=p,
        radicand=radicand,
        field_label=f"Q(sqrt({radicand}))",
        tau_swaps_classes=(cls == -1),
        s3_behavior=s3_class_behavior(p),
    )


# ---------------------------------------------------------------------------
# projector witnesses and the replace-coordinate identities


_WITNESSES = {
    (1, 2): (((1, 0), (0, 1), (-1, -1)),
             lambda a: ((1, 0), (0, 1), (-a, -1))),
    (1, 3): (((-1, 0), (1, -1), (0, 1)),
             lambda a: ((-1, 0), (a, -1), (0, 1))),
    (2, 3): (((-1, -1), (1, 0), (0, 1)),
             lambda a: ((-1, -a), (1, 0), (0, 1))),
}


def prphi_witnesses(i, j, p):
    """A pair of triples agreeing in coordinates i and j whose classes are
    plus and minus; the minus witness inserts the smallest nonsquare a."""
    _check_odd_prime(p)
    key = (min(i, j), max(i, j))
    if key not in _WITNESSES or i == j:
        raise ValueError(f"coordinate pair must be two distinct indices in 1..3, got {(i, j)}")
    a = next(x for x in range(2, p) if legendre_symbol(x, p) == -1)
    plus_t, minus_builder = _WITNESSES[key]
    plus = MarkingTriple(p, plus_t)
    minus = MarkingTriple(p, minus_builder(a))
    if classify_pm(plus) != "plus" or classify_pm(minus) != "minus":
        raise IdentityViolationError("witness triples lost their classes")
    return plus, minus


def replace_outside(coords, t, e):
    """Replace every coordinate of the index triple t outside `coords` by e."""
    return tuple(t[k] if (k + 1) in coords else e for k in range(3))


@dataclass
class GksReport:
    p: int
    pair_checks: list       # per (i,j): witnesses classify (plus, minus) and agree on i, j
    composition_checks: list  # per i: collapsing to {i} factors through any chain
    all_ok: bool


def gks_vanishing_check(p, alphabet=4):
    """The six combinatorial checks behind the vanishing argument: witness
    pairs for every coordinate pair, and the replace-coordinate composition
    q_i pr_i = (q_ik pr_ik)(q_ij pr_ij) as maps on index triples."""
    _check_odd_prime(p)
    e = object()  # fresh basepoint symbol
    pair_checks = []
    for (i, j) in ((1, 2), (1, 3), (2, 3)):
        plus, minus = prphi_witnesses(i, j, p)
        agree = (plus.vectors[i - 1] == minus.vectors[i - 1]
                 and plus.vectors[j - 1] == minus.vectors[j - 1])
        pair_checks.append({
            "pair": (i, j),
            "classes": (classify_pm(plus), classify_pm(minus)),
            "coordinates_agree": agree,
            "ok": agree and classify_pm(plus) == "plus" and classify_pm(minus) == "minus",
        })
    composition_checks = []
    letters = list(range(alphabet))
    for i in (1, 2, 3):
        others = [j for j in (1, 2, 3) if j != i]
        ok = True
        for j in others:
            k = next(m for m in others if m != j)
            for t in itertools.product(letters, repeat=3):
                direct = replace_outside((i,), t, e)
                chained = replace_outside((i, k), replace_outside((i, j), t, e), e)
                if direct != chained:
                    ok = False
        composition_checks.append({"coordinate": i, "ok": ok})
    all_ok = all(c["ok"] for c in pair_checks) and all(c["ok"] for c in composition_checks)
    return GksReport(p=p, pair_checks=pair_checks,
                     composition_checks=composition_checks, all_ok=all_ok)
