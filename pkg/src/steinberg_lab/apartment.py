"""The standard apartment at both levels, encoded by half-unit functions.

A chamber stores h(alpha) = 2 f(alpha) for every root alpha, so walls of the
fine (E) level sit at integer h and walls of the coarse (F) level at even h.
The gallery metric, translations, reflections and the special chambers of
type A with even rank all operate on these integer maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import (
    HalfIntegralityViolation,
    LevelMismatch,
    NotAWall,
    NotTypeA2n,
    UnsupportedSigma,
)
from .linalg import nullspace_vector, solve_exact
from .rootsys import _neg

E_LEVEL = "E"
F_LEVEL = "F"


class Chamber:
    """An alcove of the apartment at one level; immutable and hashable."""

    __slots__ = ("system", "level", "h", "_hash")

    def __init__(self, system, level, h):
        self.system = system
        self.level = level
        self.h = tuple(h)
        if len(self.h) != len(system.roots):
            raise ValueError("h must assign a value to every root")
        for value, alpha in zip(self.h, system.roots):
            opp = self.h[system.root_index[_neg(alpha)]]
            if level == E_LEVEL and value + opp != 1:
                raise ValueError("not a fine-level chamber: h(a)+h(-a) != 1")
            if level == F_LEVEL and (value % 2 != 0 or value + opp != 2):
                raise ValueError("not a coarse-level chamber")
        self._hash = hash((str(system.type), level, self.h))

    def value(self, alpha):
        return self.h[self.system.root_index[tuple(alpha)]]

    def f(self, alpha):
        return Fraction(self.value(alpha), 2)

    def __eq__(self, other):
        return (
            isinstance(other, Chamber)
            and self.level == other.level
            and self.system.type == other.system.type
            and self.h == other.h
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Chamber({self.system.type}, {self.level}, {self.h})"


def _make(system, level, hmap):
    return Chamber(system, level, tuple(hmap[r] for r in system.roots))


def check_concave(system, hmap, ceiling):
    """Concavity of h/2 plus the level bound h(a)+h(-a) <= ceiling."""
    for alpha in system.roots:
        if hmap[alpha] + hmap[_neg(alpha)] < 0:
            return False
        if hmap[alpha] + hmap[_neg(alpha)] > ceiling:
            return False
    for alpha in system.roots:
        for beta in system.roots:
            s = tuple(a + b for a, b in zip(alpha, beta))
            if system.is_root(s) and hmap[s] > hmap[alpha] + hmap[beta]:
                return False
    return True


def base_chambers(system):
    """The reference chambers: h = 0 on positives, 2 (resp. 1) on negatives."""
    hf = {r: (0 if system.is_positive(r) else 2) for r in system.roots}
    he = {r: (0 if system.is_positive(r) else 1) for r in system.roots}
    return _make(system, F_LEVEL, hf), _make(system, E_LEVEL, he)


def distance(c1, c2):
    """Gallery distance: separating wall count at the common level."""
    if c1.system.type != c2.system.type:
        raise LevelMismatch("chambers from different systems")
    if c1.level != c2.level:
        raise LevelMismatch("chambers at different levels")
    sys = c1.system
    total = 0
    for i, r in enumerate(sys.roots):
        if sys.is_positive(r):
            total += abs(c1.h[i] - c2.h[i])
    return total if c1.level == E_LEVEL else total // 2


def containing_f_chamber(chamber):
    """The coarse chamber whose closure contains the given fine chamber.

    Per root, the coarse bound is the smallest even half-unit at or above
    the fine bound; exactly one of h(a), h(-a) is odd, so the sums stay 2.
    """
    if chamber.level != E_LEVEL:
        raise LevelMismatch("expected a fine-level chamber")
    sys = chamber.system
    hmap = {r: (v if v % 2 == 0 else v + 1) for r, v in zip(sys.roots, chamber.h)}
    return _make(sys, F_LEVEL, hmap)


def translate(chamber, xi):
    """Translate by an integral coweight: h(alpha) += 2 <alpha, xi>."""
    sys = chamber.system
    hmap = {}
    for i, r in enumerate(sys.roots):
        shift = sys.pairing(r, [Fraction(x) for x in xi])
        if shift.denominator != 1:
            raise ValueError("coweight must pair integrally with all roots")
        hmap[r] = chamber.h[i] + 2 * int(shift)
    return _make(sys, chamber.level, hmap)


def reflect(chamber, wall):
    """Reflect across the wall alpha = c/2 (c in half-units).

    h'(beta) = h(s_alpha beta) + c <beta, alpha_vee>.
    """
    alpha, c = wall
    sys = chamber.system
    alpha = sys.check_root(alpha)
    if chamber.level == F_LEVEL and c % 2 != 0:
        raise NotAWall("coarse-level walls sit at even half-units")
    hmap = {}
    for r in sys.roots:
        img = sys.reflect_root(alpha, r)
        hmap[r] = chamber.value(img) + c * sys.root_pairing(r, alpha)
    return _make(sys, chamber.level, hmap)


def wall_neighbors(chamber):
    """The adjacent chambers, keyed by the facet root (extended simple set)."""
    out = {}
    seen = set()
    for r in chamber.system.roots:
        cand = reflect(chamber, (r, chamber.value(r)))
        if cand != chamber and distance(chamber, cand) == 1 and cand not in seen:
            seen.add(cand)
            out[r] = cand
    return out


def extended_simple_roots(chamber):
    """The d+1 facet roots of the chamber."""
    return sorted(wall_neighbors(chamber))


def chambers_within(c0, radius):
    """All chambers at gallery distance <= radius, grouped by distance."""
    shells = [[c0]]
    seen = {c0}
    for _ in range(radius):
        nxt = []
        for c in shells[-1]:
            for cand in wall_neighbors(c).values():
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        nxt.sort(key=lambda ch: ch.h)
        shells.append(nxt)
    return shells


def affine_relation(chamber):
    """Minimal positive integer relation among the facet roots.

    Returns (roots, coefficients) with sum_i coeff_i * root_i = 0.
    """
    ext = extended_simple_roots(chamber)
    rel = nullspace_vector([list(r) for r in ext])
    if any(c <= 0 for c in rel):
        rel = [-c for c in rel]
    if any(c <= 0 for c in rel):
        raise AssertionError("facet relation is not positive")
    return ext, rel


def e_chambers_in_f_chamber(cf):
    """The 2^d fine-level chambers inside a coarse chamber."""
    if cf.level != F_LEVEL:
        raise LevelMismatch("expected a coarse-level chamber")
    sys = cf.system
    pos = [r for r in sys.roots if sys.is_positive(r)]
    found = []
    for choice in product((0, 1), repeat=len(pos)):
        hmap = {}
        for r, drop in zip(pos, choice):
            hmap[r] = cf.value(r) - drop
            hmap[_neg(r)] = 1 - hmap[r]
        if check_concave(sys, hmap, 1):
            found.append(_make(sys, E_LEVEL, hmap))
    if len(found) != 2 ** sys.type.rank:
        raise AssertionError(f"expected {2 ** sys.type.rank} fine chambers, got {len(found)}")
    return sorted(found, key=lambda ch: ch.h)


def is_central(chamber):
    """No wall of the chamber lies inside a coarse wall: all facet values odd."""
    return all(chamber.value(r) % 2 == 1 for r in extended_simple_roots(chamber))


def central_chamber(sys, cf):
    """The unique fine chamber of cf with no wall in a coarse wall (type A, even rank)."""
    if not (sys.type.family == "A" and sys.type.rank % 2 == 0):
        raise NotTypeA2n(f"central chambers exist only in type A of even rank, not {sys.type}")
    hits = [c for c in e_chambers_in_f_chamber(cf) if is_central(c)]
    if len(hits) != 1:
        raise AssertionError(f"expected exactly one central chamber, found {len(hits)}")
    return hits[0]


def central_chamber_sigma(sys):
    """Closed-form central chamber of the base coarse chamber of A_{2n}.

    Builds the interleaving permutation sigma (even slots to 1..n, odd slots
    to n+1..2n+1) and reads off f on every root from the slot parities.
    """
    if not (sys.type.family == "A" and sys.type.rank % 2 == 0):
        raise NotTypeA2n(str(sys.type))
    d = sys.type.rank
    n = d // 2
    m = d + 1
    sigma = {}
    for i in range(1, m + 1):
        if i % 2 == 0:
            sigma[i] = i // 2
        else:
            sigma[i] = n + (i - 1) // 2 + 1
    # root eps_k - eps_l over the simple basis: alpha_k + ... + alpha_{l-1}
    def root_eps(k, l):
        v = [0] * d
        if k < l:
            for t in range(k, l):
                v[t - 1] += 1
        else:
            for t in range(l, k):
                v[t - 1] -= 1
        return tuple(v)

    hmap = {}
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if i % 2 == j % 2:
                f2 = 0
            elif i % 2 == 0:
                f2 = -1
            else:
                f2 = 1
            r = root_eps(sigma[i], sigma[j])
            hmap[r] = f2
            hmap[_neg(r)] = 1 - f2
    return _make(sys, E_LEVEL, hmap)


def canonical_sigma_chamber(sys, sigma_members):
    """The distinguished fine chamber attached to a tabled set.

    Weights count all simple roots when the set mixes lengths, and only the
    long simple roots when the system is non-simply-laced with an all-long
    set.  The resulting f takes integer values on every member.
    """
    from . import tables

    try:
        expected = tables.sign_basis(sys)
    except Exception as exc:  # A with even rank
        raise UnsupportedSigma(str(exc))
    if {sys.pos_rep(m) for m in sigma_members} != {sys.pos_rep(m) for m in expected}:
        raise UnsupportedSigma("set is not the tabled representative")
    # integrality on the set holds for the tabled signs, so evaluate there
    sigma_members = expected
    lengths = {sys.length_sq(m) for m in sigma_members}
    simply_laced = all(sys.is_long(s) for s in sys.simples)
    if not simply_laced and lengths == {2}:
        weight = sys.long_height
    else:
        weight = sys.height
    hmap = {}
    for r in sys.roots:
        if sys.is_positive(r):
            hmap[r] = -weight(r)
        else:
            hmap[r] = weight(_neg(r)) + 1
    if not check_concave(sys, hmap, 1):
        raise AssertionError("canonical chamber candidate is not concave")
    chamber = _make(sys, E_LEVEL, hmap)
    for m in sigma_members:
        if chamber.value(m) % 2 != 0:
            raise AssertionError("canonical chamber must be integral on the set")
    return chamber


@dataclass(frozen=True)
class FacetFunctional:
    """Linear functional on the span of a full-rank set, from member values.

    Values are stored in half-units (2 f'), like chambers.
    """

    system: object
    members: tuple
    values2: tuple  # 2 f'(beta_i), odd integers

    def expansion(self, alpha):
        sol = solve_exact([list(m) for m in self.members], [Fraction(c) for c in alpha])
        if sol is None:
            raise ValueError(f"{alpha} is not in the span")
        return sol

    def value2(self, alpha):
        """2 f'(alpha); raises HalfIntegralityViolation if not an integer."""
        alpha = self.system.check_root(alpha)
        coeffs = self.expansion(alpha)
        for lam in coeffs:
            if (2 * lam).denominator != 1:
                raise HalfIntegralityViolation(
                    f"expansion coefficient {lam} of {alpha} is not half-integral"
                )
        total = sum(lam * v for lam, v in zip(coeffs, self.values2))
        if total.denominator != 1:
            raise HalfIntegralityViolation(f"functional value {total}/2 at {alpha}")
        return int(total)


def facet_functional(sys, members, values):
    """Build the facet functional from half-unit values on the members.

    values maps each member to f'(beta_i), which must lie in Z + 1/2 (the
    walls of a fixed facet sit strictly between the coarse wall positions).
    """
    members = tuple(sys.check_root(m) for m in members)
    if len(members) != sys.type.rank:
        raise ValueError("facet functionals need a full-rank set")
    vals2 = []
    for m in members:
        v = Fraction(values[m])
        if (2 * v).denominator != 1 or (2 * v).numerator % 2 == 0:
            raise ValueError(f"value {v} at {m} must be a proper half-integer")
        vals2.append(int(2 * v))
    fn = FacetFunctional(sys, members, tuple(vals2))
    for alpha in sys.roots:
        v2 = fn.value2(alpha)
        opposite = fn.value2(_neg(alpha))
        if v2 + opposite != 0:
            raise AssertionError("facet functional must be odd under negation")
    return fn
