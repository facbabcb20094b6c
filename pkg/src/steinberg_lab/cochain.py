"""Harmonic cochains on apartment chambers and the (Z/2)^r sign calculus.

The building is never materialized above rank one.  Panel sums use the
near/far multiplicity model (one chamber of the panel is closer to the
cochain's base, the remaining q carry the far value), which is faithful for
cochains invariant under the panel fixator; the rank-one tree oracle
validates the model independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import apartment, tables
from .errors import (
    AmbiguousConstraints,
    InconsistentConstraints,
    NonIntegralPairing,
    NotApplicable,
    NotHarmonicBase,
    UnsupportedPanel,
)
from .rootsys import _neg, _sub


# -- sign vectors and characters --------------------------------------------


@dataclass(frozen=True)
class SignVector:
    """Element of (Z/2)^r; bit i-1 refers to the i-th basis member."""

    bits: int
    r: int

    def __mul__(self, other):
        if self.r != other.r:
            raise ValueError("rank mismatch")
        return SignVector(self.bits ^ other.bits, self.r)

    def support(self):
        return [i + 1 for i in range(self.r) if self.bits >> i & 1]

    def __str__(self):
        return "".join(f"e{i}" for i in self.support()) or "1"


def sign_vector(r, indices):
    bits = 0
    for i in indices:
        bits ^= 1 << (i - 1)
    return SignVector(bits, r)


@dataclass(frozen=True)
class SignCharacter:
    """A {+1,-1}-valued character of (Z/2)^r."""

    dual_bits: int
    r: int

    def value(self, v: SignVector):
        if v.r != self.r:
            raise ValueError("rank mismatch")
        return -1 if bin(self.dual_bits & v.bits).count("1") % 2 else 1

    def values_on_basis(self):
        return [self.value(sign_vector(self.r, [i])) for i in range(1, self.r + 1)]


def eic_character(sys):
    """The tabled character on the sign basis, one rule per family.

    These are the values forced by the generating relations (negated simple
    members give -1; rank-two mixed pairs give -1 on the product; simple
    coroot actions give +1) and they are what the solver reproduces.
    """
    fam, d = sys.type.family, sys.type.rank
    if tables.is_a2n(sys):
        raise NotApplicable("no sign character in type A of even rank")
    r = tables.expected_sigma_a_size(sys)
    if fam == "A" or fam == "G":
        neg = range(1, r + 1)
    elif fam == "B":
        neg = [i for i in range(1, r + 1) if i % 2 == 0 or i == d]
    elif fam == "C":
        neg = [i for i in range(1, r + 1) if (d + 1 - i) % 2 == 1]
    elif fam == "D":
        neg = range(1, r + 1)
    elif fam == "E" and d == 6:
        neg = range(1, r + 1)
    elif fam == "E":
        # ranks 7 and 8: every basis value is -1
        neg = range(1, r + 1)
    elif fam == "F":
        neg = [2, 4]
    else:
        raise NotApplicable(str(sys.type))
    bits = 0
    for i in neg:
        bits |= 1 << (i - 1)
    return SignCharacter(bits, r)


# -- coroot actions and constraint building ----------------------------------


def coroot_action(sys, sigma_members, xi):
    """Sign vector of a coweight: bit j is the parity of <beta_j, xi>."""
    bits = 0
    for j, beta in enumerate(sigma_members):
        val = sys.pairing(beta, [Fraction(x) for x in xi])
        if val.denominator != 1:
            raise NonIntegralPairing(f"<{beta}, xi> = {val}")
        if int(val) % 2:
            bits |= 1 << j
    return SignVector(bits, len(sigma_members))


def _is_neg_simple(sys, root):
    return _neg(root) in sys.simples


def _rank_two_b2(sys, beta, alpha):
    """Do beta and alpha generate an eight-root rank-two subsystem?"""
    span = []
    for r in sys.roots:
        sol = _try_plane(sys, beta, alpha, r)
        if sol:
            span.append(r)
    return len(span) == 8


def _try_plane(sys, u, v, r):
    from .linalg import solve_exact

    try:
        sol = solve_exact([list(u), list(v)], [Fraction(c) for c in r])
    except ValueError:
        return False
    return sol is not None


def build_constraints(sys):
    """Constraints pinning the sign character, from the canonical chamber.

    Emits (e_i, -1) when beta_i is a negated simple root; (e_i e_j, -1) for
    rank-two mixed pairs whose connecting short root is a negated simple
    with integral facet value; and (action of alpha_k_vee, +1) for every
    simple coroot.
    """
    members = tables.sign_basis(sys)
    r = len(members)
    chamber = apartment.canonical_sigma_chamber(sys, members)
    constraints = []
    for i, beta in enumerate(members, start=1):
        if _is_neg_simple(sys, beta):
            constraints.append((sign_vector(r, [i]), -1))
    seen_pairs = set()
    for a, beta_a in enumerate(members, start=1):
        for b, beta_b in enumerate(members, start=1):
            if a == b or frozenset((a, b)) in seen_pairs:
                continue
            diff = _sub(beta_b, beta_a)
            if any(c % 2 for c in diff):
                continue
            alpha = tuple(c // 2 for c in diff)
            if not sys.is_root(alpha) or not _is_neg_simple(sys, alpha):
                continue
            if not _rank_two_b2(sys, beta_b, alpha):
                continue
            # facet value of alpha: half the difference of the chamber values
            if (chamber.value(beta_b) - chamber.value(beta_a)) % 4 != 0:
                continue
            seen_pairs.add(frozenset((a, b)))
            constraints.append((sign_vector(r, [a, b]), -1))
    for k in range(sys.type.rank):
        action = coroot_action(sys, members, _coroot_coweight(sys, k))
        constraints.append((action, 1))
    return constraints


def _coroot_coweight(sys, k):
    coeffs = [Fraction(0)] * sys.type.rank
    coeffs[k] = Fraction(1)
    return tuple(coeffs)


def solve_character(r, constraints):
    """GF(2) solve for the character satisfying the given sign constraints.

    Raises AmbiguousConstraints when the constraint vectors do not span,
    InconsistentConstraints when they contradict.
    """
    rows = []
    for vec, sign in constraints:
        if sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        rows.append((vec.bits, 1 if sign == -1 else 0, [vec]))
    solution_bits = 0
    pivots = {}
    for bits, rhs, origin in rows:
        cur_bits, cur_rhs, cur_origin = bits, rhs, list(origin)
        for col, (pbits, prhs, porigin) in pivots.items():
            if cur_bits >> col & 1:
                cur_bits ^= pbits
                cur_rhs ^= prhs
                cur_origin += porigin
        if cur_bits == 0:
            if cur_rhs != 0:
                raise InconsistentConstraints(
                    "constraints contradict", combination=cur_origin
                )
            continue
        col = cur_bits.bit_length() - 1
        pivots[col] = (cur_bits, cur_rhs, cur_origin)
    if len(pivots) < r:
        free = [i + 1 for i in range(r) if i not in pivots]
        raise AmbiguousConstraints(
            f"constraints span a proper subgroup; free coordinates {free}", free_vectors=free
        )
    # back-substitute to a diagonal system
    for col in sorted(pivots, reverse=True):
        bits, rhs, _ = pivots[col]
        for other in sorted(pivots):
            if other == col:
                continue
            obits, orhs, oorigin = pivots[other]
            if obits >> col & 1:
                pivots[other] = (obits ^ bits, orhs ^ rhs, oorigin)
    dual = 0
    for col, (bits, rhs, _) in pivots.items():
        if rhs:
            dual |= 1 << col
    return SignCharacter(dual, r)


def solved_character(sys):
    """Solve the full constraint system for one type."""
    members = tables.sign_basis(sys)
    return solve_character(len(members), build_constraints(sys))


# -- cochains ----------------------------------------------------------------


@dataclass
class Cochain:
    """Finitely supported chamber function with exact rational values."""

    values: dict
    base: object
    q: int
    retraction_invariant: bool = False

    def __getitem__(self, chamber):
        return self.values.get(chamber, Fraction(0))

    def __contains__(self, chamber):
        return chamber in self.values


def iwahori_vector(c0, q, radius):
    """The normalized vector C -> (-q)^(-d(C0, C)) within the given radius."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be an odd integer >= 3")
    values = {}
    for dist, shell in enumerate(apartment.chambers_within(c0, radius)):
        for c in shell:
            values[c] = Fraction((-1) ** dist, q**dist)
    return Cochain(values=values, base=c0, q=q, retraction_invariant=True)


def panel_sum(panel, f):
    """Near value + q * far value across one panel.

    panel is (chamber, facet_root); the opposite chamber is the reflection
    across that wall.  Requires a declared retraction-invariant cochain.
    """
    if not f.retraction_invariant:
        raise UnsupportedPanel("cochain carries no retraction declaration")
    chamber, root = panel
    other = apartment.reflect(chamber, (root, chamber.value(root)))
    if apartment.distance(chamber, other) != 1:
        raise UnsupportedPanel(f"{root} does not bound a facet of the chamber")
    d1 = apartment.distance(f.base, chamber)
    d2 = apartment.distance(f.base, other)
    if d1 == d2:
        raise UnsupportedPanel("panel is equidistant from the base")
    near, far = (chamber, other) if d1 < d2 else (other, chamber)
    return f[near] + f.q * f[far]


def extend_by_harmonicity(base_values, resolver, q, chambers, d_panel_groups=()):
    """Extend values around a facet outward by the factor (-1/q) per step.

    base_values maps the chambers around the facet to rationals; resolver
    maps any chamber to its unique closure chamber among them.  Optional
    d_panel_groups lists, per panel of the facet star, the full multiset of
    values over the q+1 building chambers; each must sum to zero.
    """
    for group in d_panel_groups:
        if sum(group, Fraction(0)) != 0:
            raise NotHarmonicBase(f"facet panel with nonzero sum {sum(group, Fraction(0))}")
    values = {}
    base = None
    for c in chambers:
        c0 = resolver(c)
        if c0 not in base_values:
            raise NotHarmonicBase("resolver left the declared base set")
        dist = apartment.distance(c, c0)
        values[c] = base_values[c0] * Fraction((-1) ** dist, q**dist)
        if base is None:
            base = c0
    for c0, v in base_values.items():
        values.setdefault(c0, v)
        if base is None:
            base = c0
    return Cochain(values=values, base=base, q=q, retraction_invariant=True)


def nearest_resolver(base_chambers_list):
    """Resolver picking the unique nearest chamber of the base set."""

    def resolve(c):
        dists = sorted((apartment.distance(c, b), b.h) for b in base_chambers_list)
        best = [b for b in base_chambers_list if apartment.distance(c, b) == dists[0][0]]
        if len(best) != 1:
            raise NotHarmonicBase("no unique closure chamber; facet star ambiguous")
        return best[0]

    return resolve


# -- class values and wall ratios ---------------------------------------------


def a2n_class_value(k, q, base):
    """Constant value on a class reached after k steps of the support recursion.

    k = 0 is the reference class; one step divides by (1 - q); every later
    step multiplies by 2/(1 - q).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = Fraction(base)
    if k == 0:
        return base
    value = base / (1 - q)
    for _ in range(k - 1):
        value *= Fraction(2, 1 - q)
    return value


@dataclass(frozen=True)
class R1R2Result:
    r1: int
    r2: int


def r1_r2(sys):
    """Wall counts between adjacent fixed facets, total and even-height.

    Defined for the positive-dimensional fixed-subcomplex types (A of odd
    rank >= 3, D of odd rank, E6).  Checks independence of the separating
    direction and the doubling relation r1 = 2 r2.
    """
    from .sorth import levi_support

    fam, d = sys.type.family, sys.type.rank
    applicable = (
        (fam == "A" and d % 2 == 1 and d >= 3)
        or (fam == "D" and d % 2 == 1)
        or (fam == "E" and d == 6)
    )
    if not applicable:
        raise NotApplicable(f"{sys.type} has no positive-dimensional fixed subcomplex")
    members = tables.sign_basis(sys)
    levi = set(levi_support(sys, members))
    outside = [i for i in range(sys.type.rank) if i not in levi]
    counts = []
    for i in outside:
        alpha = sys.simples[i]
        cls = [
            beta
            for beta in sys.roots
            if all((beta[k] - alpha[k]) == 0 for k in range(sys.type.rank) if k not in levi)
        ]
        r1 = len(cls)
        r2 = sum(1 for beta in cls if sum(beta) % 2 == 0)
        counts.append((r1, r2))
    if len(set(counts)) != 1:
        raise AssertionError(f"wall counts depend on the direction: {counts}")
    r1, r2 = counts[0]
    if not (r2 < r1 and r1 == 2 * r2):
        raise AssertionError(f"expected r2 < r1 = 2 r2, got {counts[0]}")
    return R1R2Result(r1=r1, r2=r2)
