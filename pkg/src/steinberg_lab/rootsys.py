"""Irreducible root systems of types A-G with exact integer/rational arithmetic.

Roots are stored as integer coefficient vectors over the simple roots
(Bourbaki numbering).  Euclidean data comes from the classical ambient
realizations, rescaled so that long roots have squared length 2; every
pairing <alpha, beta_vee> is then an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import InvalidRank, NotARoot, ProportionalPair
from .linalg import invert_matrix, solve_exact

Root = tuple

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

#: Orders of the finite Weyl groups, used for enumeration budgets.
_FACTORIALS = [1]
for _i in range(1, 13):
    _FACTORIALS.append(_FACTORIALS[-1] * _i)


@dataclass(frozen=True)
class RootSystemType:
    """A family letter and a rank, validated against the classical bounds."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise InvalidRank(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"rank {self.rank} out of bounds for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _basis(dim, i):
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return tuple(v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _neg(u):
    return tuple(-a for a in u)


def _scale(c, u):
    return tuple(c * a for a in u)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _ambient_simples(family, d):
    """Simple roots in the classical ambient coordinates (Bourbaki plates)."""
    if family == "A":
        dim = d + 1
        return [_sub(_basis(dim, i), _basis(dim, i + 1)) for i in range(d)]
    if family == "B":
        return [_sub(_basis(d, i), _basis(d, i + 1)) for i in range(d - 1)] + [_basis(d, d - 1)]
    if family == "C":
        return [_sub(_basis(d, i), _basis(d, i + 1)) for i in range(d - 1)] + [
            _scale(2, _basis(d, d - 1))
        ]
    if family == "D":
        return [_sub(_basis(d, i), _basis(d, i + 1)) for i in range(d - 1)] + [
            _add(_basis(d, d - 2), _basis(d, d - 1))
        ]
    if family == "G":
        e1, e2, e3 = _basis(3, 0), _basis(3, 1), _basis(3, 2)
        return [_sub(e1, e2), _add(_sub(_add(e2, e3), e1), _neg(e1))]
    if family == "F":
        e = [_basis(4, i) for i in range(4)]
        half = Fraction(1, 2)
        return [
            _sub(e[1], e[2]),
            _sub(e[2], e[3]),
            e[3],
            tuple(half * x for x in _sub(_sub(_sub(e[0], e[1]), e[2]), e[3])),
        ]
    if family == "E":
        e = [_basis(8, i) for i in range(8)]
        half = Fraction(1, 2)
        a1 = tuple(
            half * x
            for x in _sub(_add(e[0], e[7]), _add(_add(_add(e[1], e[2]), _add(e[3], e[4])), _add(e[5], e[6])))
        )
        simples = [a1, _add(e[0], e[1])]
        simples += [_sub(e[i], e[i - 1]) for i in range(1, d - 1)]
        return simples
    raise InvalidRank(family)


def _ambient_all_roots(family, d):
    """All roots in ambient coordinates, for the table-versus-closure oracle."""
    roots = []
    if family == "A":
        dim = d + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.append(_sub(_basis(dim, i), _basis(dim, j)))
    elif family in ("B", "C", "D"):
        for i in range(d):
            for j in range(i + 1, d):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append(_add(_scale(si, _basis(d, i)), _scale(sj, _basis(d, j))))
        if family == "B":
            for i in range(d):
                roots.append(_basis(d, i))
                roots.append(_neg(_basis(d, i)))
        if family == "C":
            for i in range(d):
                roots.append(_scale(2, _basis(d, i)))
                roots.append(_scale(-2, _basis(d, i)))
    elif family == "G":
        e = [_basis(3, i) for i in range(3)]
        base = [
            _sub(e[0], e[1]),
            _sub(e[1], e[2]),
            _sub(e[0], e[2]),
            _sub(_scale(2, e[0]), _add(e[1], e[2])),
            _sub(_scale(2, e[1]), _add(e[0], e[2])),
            _sub(_scale(2, e[2]), _add(e[0], e[1])),
        ]
        for v in base:
            roots.append(v)
            roots.append(_neg(v))
    elif family == "F":
        e = [_basis(4, i) for i in range(4)]
        for i in range(4):
            roots.append(e[i])
            roots.append(_neg(e[i]))
        for i in range(4):
            for j in range(i + 1, 4):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append(_add(_scale(si, e[i]), _scale(sj, e[j])))
        half = Fraction(1, 2)
        for signs in product((1, -1), repeat=4):
            roots.append(tuple(half * s for s in signs))
    elif family == "E":
        e = [_basis(8, i) for i in range(8)]
        half = Fraction(1, 2)
        if d == 8:
            for i in range(8):
                for j in range(i + 1, 8):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.append(_add(_scale(si, e[i]), _scale(sj, e[j])))
            for signs in product((1, -1), repeat=8):
                if signs.count(-1) % 2 == 0:
                    roots.append(tuple(half * s for s in signs))
        elif d == 7:
            for i in range(6):
                for j in range(i + 1, 6):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.append(_add(_scale(si, e[i]), _scale(sj, e[j])))
            roots.append(_sub(e[6], e[7]))
            roots.append(_sub(e[7], e[6]))
            for signs in product((1, -1), repeat=6):
                if signs.count(-1) % 2 == 1:
                    v = list(half * s for s in signs) + [-half, half]
                    roots.append(tuple(v))
                    roots.append(_neg(tuple(v)))
        elif d == 6:
            for i in range(5):
                for j in range(i + 1, 5):
                    for si in (1, -1):
                        for sj in (1, -1):
                            roots.append(_add(_scale(si, e[i]), _scale(sj, e[j])))
            for signs in product((1, -1), repeat=5):
                if signs.count(-1) % 2 == 0:
                    v = list(half * s for s in signs) + [-half, -half, half]
                    roots.append(tuple(v))
                    roots.append(_neg(tuple(v)))
    return roots


class RootSystem:
    """Immutable tables for one irreducible root system.

    Attributes
    ----------
    type:  RootSystemType
    roots: all roots as integer tuples over the simple basis, sorted
    cartan: C[i][j] = <alpha_j, alpha_i_vee>
    highest_root: the dominant long root
    exponents: exponents of the Weyl group, increasing
    rho: half-sum of the positive roots over the simple basis (Fractions)
    """

    def __init__(self, type_: RootSystemType):
        self.type = type_
        d = type_.rank
        amb = _ambient_simples(type_.family, d)
        self._ambient_simples = amb
        # Rescale so long roots have squared length 2.
        raw = [[_dot(a, b) for b in amb] for a in amb]
        maxlen = max(raw[i][i] for i in range(d))
        scale = Fraction(2) / maxlen
        self.gram = tuple(tuple(scale * raw[i][j] for j in range(d)) for i in range(d))
        self.cartan = tuple(
            tuple(int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(d)) for i in range(d)
        )
        self.simples = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        self.roots = tuple(sorted(self._closure()))
        self._root_set = frozenset(self.roots)
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        self._pairing_cache = {}
        self.positive_roots = tuple(r for r in self.roots if self.is_positive(r))
        self.highest_root = max(self.positive_roots, key=lambda r: (sum(r), r))
        for r in self.positive_roots:
            if any(a > b for a, b in zip(r, self.highest_root)):
                raise AssertionError("highest root fails to dominate")
        self.exponents = self._exponents()
        two_rho = [0] * d
        for r in self.positive_roots:
            for i, c in enumerate(r):
                two_rho[i] += c
        self.rho = tuple(Fraction(c, 2) for c in two_rho)
        self.two_rho = tuple(two_rho)
        self._cartan_inv = None

    # -- construction -------------------------------------------------

    def _closure(self):
        frontier = set(self.simples)
        seen = set(frontier) | {_neg(r) for r in frontier}
        while frontier:
            nxt = set()
            for r in frontier:
                for i in range(self.type.rank):
                    for img in (self.simple_reflect(i, r), _neg(self.simple_reflect(i, r))):
                        if img not in seen:
                            seen.add(img)
                            nxt.add(img)
            frontier = nxt
        return seen

    def _exponents(self):
        """Exponents as the conjugate partition of the height distribution."""
        by_height = {}
        for r in self.positive_roots:
            by_height[sum(r)] = by_height.get(sum(r), 0) + 1
        heights = sorted(by_height)
        counts = [by_height[h] for h in heights]
        exps = []
        for level in range(1, max(counts) + 1):
            exps.append(sum(1 for c in counts if c >= level))
        # conjugate partition read off largest-first; exponents increase
        return tuple(sorted(exps))

    # -- membership and signs ------------------------------------------

    def is_root(self, v):
        return tuple(v) in self._root_set

    def check_root(self, v):
        v = tuple(v)
        if v not in self._root_set:
            raise NotARoot(f"{v} is not a root of {self.type}")
        return v

    @staticmethod
    def is_positive(v):
        for c in v:
            if c > 0:
                return True
            if c < 0:
                return False
        raise NotARoot("zero vector")

    def pos_rep(self, v):
        """Representative of {v, -v} with nonnegative leading sign."""
        return v if self.is_positive(v) else _neg(v)

    def height(self, v):
        return sum(v)

    # -- exact euclidean data -------------------------------------------

    def inner(self, u, v):
        total = Fraction(0)
        for i, a in enumerate(u):
            if a:
                row = self.gram[i]
                for j, b in enumerate(v):
                    if b:
                        total += a * b * row[j]
        return total

    def length_sq(self, v):
        return self.inner(v, v)

    def is_long(self, v):
        return self.length_sq(v) == 2

    def long_height(self, v):
        """Number of long simple roots in v, counted with multiplicity."""
        return sum(c for c, s in zip(v, self.simples) if self.is_long(s))

    def root_pairing(self, alpha, beta):
        """<alpha, beta_vee> for two roots, always an exact integer."""
        key = (alpha, beta)
        hit = self._pairing_cache.get(key)
        if hit is not None:
            return hit
        val = 2 * self.inner(alpha, beta) / self.inner(beta, beta)
        if val.denominator != 1:
            raise AssertionError("non-integral root pairing")
        val = int(val)
        self._pairing_cache[key] = val
        return val

    def pairing(self, alpha, xi):
        """<alpha, xi> for a root and a rational coweight over the simple coroots."""
        alpha = self.check_root(alpha)
        total = Fraction(0)
        for j, x in enumerate(xi):
            if x:
                total += x * sum(m * self.cartan[j][k] for k, m in enumerate(alpha))
        return total

    def fundamental_coweight(self, i):
        """Coweight xi with <alpha_j, xi> = delta_ij, over the simple coroots."""
        if self._cartan_inv is None:
            self._cartan_inv = invert_matrix([list(row) for row in self.cartan])
        # <alpha_j, sum_k x_k alpha_k_vee> = sum_k x_k C[k][j], so x solves
        # C^T x = e_i, i.e. x is the i-th row of the inverse of C
        return tuple(self._cartan_inv[i][j] for j in range(self.type.rank))

    # -- reflections -----------------------------------------------------

    def simple_reflect(self, i, v):
        pair = sum(m * self.cartan[i][k] for k, m in enumerate(v))
        out = list(v)
        out[i] -= pair
        return tuple(out)

    def reflect_root(self, beta, v):
        """s_beta(v) for a root beta and any lattice vector v."""
        pair = 2 * self.inner(v, beta) / self.inner(beta, beta)
        if pair.denominator != 1:
            raise AssertionError("non-integral reflection pairing")
        return _sub(v, _scale(int(pair), beta))

    # -- classical quantities ---------------------------------------------

    def coxeter_number(self):
        """1 + sum of the highest-root coefficients."""
        return 1 + sum(self.highest_root)

    def extended_simple_set(self):
        return list(self.simples) + [_neg(self.highest_root)]

    def weyl_order(self):
        fam, d = self.type.family, self.type.rank
        if fam == "A":
            return _FACTORIALS[d + 1]
        if fam in ("B", "C"):
            return (1 << d) * _FACTORIALS[d]
        if fam == "D":
            return (1 << (d - 1)) * _FACTORIALS[d]
        if fam == "G":
            return 12
        if fam == "F":
            return 1152
        return {6: 51840, 7: 2903040, 8: 696729600}[d]

    # -- ambient translation -----------------------------------------------

    def from_ambient(self, vec):
        """Express an ambient-coordinate vector over the simple roots."""
        cols = self._ambient_simples
        sol = solve_exact(list(cols), [Fraction(x) for x in vec])
        if sol is None:
            raise NotARoot(f"{vec} is not in the root lattice span")
        out = []
        for x in sol:
            if x.denominator != 1:
                raise NotARoot(f"{vec} is not an integral lattice vector")
            out.append(int(x))
        return tuple(out)

    def to_ambient(self, root):
        dim = len(self._ambient_simples[0])
        total = [Fraction(0)] * dim
        for c, s in zip(root, self._ambient_simples):
            for i in range(dim):
                total[i] += c * s[i]
        return tuple(total)

    def ambient_root_table(self):
        """Roots enumerated straight from the classical plate descriptions."""
        return sorted(self.from_ambient(v) for v in _ambient_all_roots(self.type.family, self.type.rank))

    def __repr__(self):
        return f"RootSystem({self.type})"


@lru_cache(maxsize=None)
def build(family, rank):
    """Construct (and cache) the root system of the given type."""
    return RootSystem(RootSystemType(family, rank))


def pairing(sys, alpha, xi):
    """Module-level alias for the coweight pairing."""
    return sys.pairing(alpha, xi)


def strongly_orthogonal(sys, alpha, beta):
    """True iff <alpha, beta_vee> = 0 and alpha + beta is not a root."""
    alpha = sys.check_root(alpha)
    beta = sys.check_root(beta)
    if alpha == beta or alpha == _neg(beta):
        raise ProportionalPair(f"{alpha} and {beta} are proportional")
    if sys.root_pairing(alpha, beta) != 0:
        return False
    return not sys.is_root(_add(alpha, beta))


def coxeter_number(sys):
    return sys.coxeter_number()


def extended_simple_set(sys):
    return sys.extended_simple_set()


def canonical_set(sys, members, signs_insensitive=False):
    """Canonical hashable image of a set of roots."""
    if signs_insensitive:
        return tuple(sorted(sys.pos_rep(m) for m in members))
    return tuple(sorted(members))


def weyl_orbit(sys, seed_sets, max_size=200000, signs_insensitive=False):
    """BFS closure of root sets under the simple reflections.

    Returns (orbit, truncated) where orbit is a set of canonical set-images
    and truncated reports whether max_size stopped the walk early.
    """
    start = set()
    for s in seed_sets:
        members = [sys.check_root(m) for m in s]
        start.add(canonical_set(sys, members, signs_insensitive))
    seen = set(start)
    frontier = list(start)
    truncated = False
    while frontier:
        nxt = []
        for cur in frontier:
            for i in range(sys.type.rank):
                img = canonical_set(sys, [sys.simple_reflect(i, m) for m in cur], signs_insensitive)
                if img not in seen:
                    if len(seen) >= max_size:
                        truncated = True
                        continue
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen, truncated


# -- closed subsystems ----------------------------------------------------


def subsystem_components(sys, roots):
    """Split a symmetric set of roots into irreducible components.

    Components are sorted by their lexicographically smallest member.
    """
    roots = sorted(roots)
    index = {r: i for i, r in enumerate(roots)}
    parent = list(range(len(roots)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(roots):
        for j in range(i + 1, len(roots)):
            b = roots[j]
            if sys.root_pairing(a, b) != 0:
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[ra] = rb
        # +/- pairs always join through the pairing -2
    groups = {}
    for i, r in enumerate(roots):
        groups.setdefault(find(i), []).append(r)
    comps = [sorted(g) for g in groups.values()]
    comps.sort(key=lambda g: g[0])
    return comps


def subsystem_simples(sys, roots):
    """Indecomposable positive members of a closed symmetric subset."""
    pos = [r for r in roots if sys.is_positive(r)]
    pos_set = set(pos)
    simples = []
    for r in pos:
        decomposable = False
        for a in pos:
            if a != r:
                diff = _sub(r, a)
                if diff in pos_set:
                    decomposable = True
                    break
        if not decomposable:
            simples.append(r)
    return sorted(simples)


def _cartan_of(sys, simples):
    return [[sys.root_pairing(b, a) for b in simples] for a in simples]


def _permutation_equivalent(m1, m2):
    n = len(m1)
    if len(m2) != n:
        return False
    used = [False] * n
    assign = [-1] * n

    def backtrack(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or m1[i][i] != m2[j][j]:
                continue
            ok = True
            for k in range(i):
                if m1[i][k] != m2[j][assign[k]] or m1[k][i] != m2[assign[k]][j]:
                    ok = False
                    break
            if ok:
                used[j] = True
                assign[i] = j
                if backtrack(i + 1):
                    return True
                used[j] = False
                assign[i] = -1
        return False

    return backtrack(0)


def classify_subsystem(sys, roots):
    """Isomorphism types of the components of a closed subsystem.

    Returns a sorted list of (family, rank) pairs, canonicalized so that
    coincidences use the earliest family letter (D3 reports as A3, C2 as B2).
    """
    out = []
    for comp in subsystem_components(sys, roots):
        simples = subsystem_simples(sys, comp)
        cartan = _cartan_of(sys, simples)
        rank = len(simples)
        found = None
        for fam in ("A", "B", "C", "D", "E", "F", "G"):
            lo, hi = _RANK_BOUNDS[fam]
            if rank < lo or (hi is not None and rank > hi):
                continue
            candidate = build(fam, rank)
            if len(candidate.roots) != len(comp):
                continue
            ref = [list(row) for row in candidate.cartan]
            if _permutation_equivalent(cartan, ref):
                found = (fam, rank)
                break
        if found is None:
            raise AssertionError("unclassifiable component")
        out.append(found)
    return sorted(out)


# -- dominance walks -------------------------------------------------------


def word_to_dominant(sys, sub_roots, root):
    """Reflections (as roots of the subsystem) taking root to the dominant
    representative of its length class inside the closed subsystem.

    Returns (dominant, word); applying s_{word[0]}, s_{word[1]}, ... to root,
    in that order, yields dominant.
    """
    simples = subsystem_simples(sys, sub_roots)
    cur = root
    word = []
    moved = True
    while moved:
        moved = False
        for s in simples:
            if sys.root_pairing(cur, s) < 0:
                cur = sys.reflect_root(s, cur)
                word.append(s)
                moved = True
                break
    return cur, word


def apply_word(sys, word, v):
    """Apply reflections left to right."""
    for beta in word:
        v = sys.reflect_root(beta, v)
    return v


def expand_to_simple_word(sys, beta):
    """Express s_beta as a word in simple reflections (list of indices)."""
    beta = sys.check_root(beta)
    cur = sys.pos_rep(beta)
    conj = []
    while cur not in sys.simples:
        for i, s in enumerate(sys.simples):
            if cur != s and sys.root_pairing(cur, s) > 0:
                nxt = sys.simple_reflect(i, cur)
                if sys.is_positive(nxt):
                    conj.append(i)
                    cur = nxt
                    break
        else:
            raise AssertionError("dominance walk stuck")
    i0 = sys.simples.index(cur)
    # s_beta = w^-1 s_{i0} w with w the recorded conjugating word; applied
    # left to right that reads conj, i0, conj reversed
    return conj + [i0] + list(reversed(conj))
