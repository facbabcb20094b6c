"""Strongly-orthogonal root sets: construction, condition (C1), classification."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import tables
from .errors import BudgetExceeded, CertificateNotFound, NotApplicable  # noqa: F401 (re-exported)
from .rootsys import (
    _add,
    _neg,
    apply_word,
    canonical_set,
    classify_subsystem,
    strongly_orthogonal,
    subsystem_components,
    subsystem_simples,
    word_to_dominant,
)

_DEFAULT_BUDGET = 1_000_000


def _budget():
    raw = os.environ.get("STEINBERG_BUDGET")
    return int(raw) if raw else _DEFAULT_BUDGET


@dataclass(frozen=True)
class SOSet:
    """An ordered list of pairwise strongly-orthogonal roots."""

    system: object = field(compare=False)
    members: tuple = ()

    def __post_init__(self):
        sys = self.system
        for m in self.members:
            sys.check_root(m)
        for i, a in enumerate(self.members):
            for b in self.members[i + 1 :]:
                if not strongly_orthogonal(sys, a, b):
                    raise ValueError(f"{a} and {b} are not strongly orthogonal")
        # pairwise orthogonal roots are automatically linearly independent
        if len(self.members) > sys.type.rank:
            raise ValueError("more members than the rank allows")

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class C1Witness:
    alpha: tuple
    beta: tuple


def so_set(sys, members):
    return SOSet(sys, tuple(tuple(m) for m in members))


def so_complement(sys, members):
    """Roots strongly orthogonal to every member; a closed subsystem."""
    members = [sys.check_root(m) for m in members]
    out = []
    for r in sys.roots:
        if any(r == m or r == _neg(m) for m in members):
            continue
        if all(strongly_orthogonal(sys, r, m) for m in members):
            out.append(r)
    comp = tuple(sorted(out))
    comp_set = set(comp)
    for r in comp:
        if _neg(r) not in comp_set:
            raise AssertionError("complement not symmetric")
    for a in comp:
        for b in comp:
            s = _add(a, b)
            if sys.is_root(s) and s not in comp_set:
                raise AssertionError("complement not closed")
    return comp


def sigma_a(sys):
    """Recursive highest-root construction of the classified set.

    Takes the highest root of each irreducible component, then recurses on
    the strongly-orthogonal complement inside that component.  Components
    are processed in lexicographic order of their smallest member.
    """
    members = _sigma_rec(sys, list(sys.roots))
    return so_set(sys, members)


def _sigma_rec(sys, roots):
    if not roots:
        return []
    out = []
    for comp in subsystem_components(sys, roots):
        pos = [r for r in comp if sys.is_positive(r)]
        top = max(pos, key=lambda r: (sum(r), r))
        out.append(top)
        comp_set = set(comp)
        rest = [
            r
            for r in comp
            if r != top and r != _neg(top) and strongly_orthogonal(sys, r, top) and r in comp_set
        ]
        out.extend(_sigma_rec(sys, rest))
    return out


def satisfies_c1(sys, soset):
    """First witness (alpha in the set, beta in Phi) of condition (C1), or None.

    beta must be orthogonal to every member except alpha, with <alpha,
    beta_vee> odd.
    """
    members = soset.members if isinstance(soset, SOSet) else tuple(soset)
    for alpha in members:
        others = [m for m in members if m != alpha]
        for beta in sys.roots:
            if sys.root_pairing(alpha, beta) % 2 == 0:
                continue
            if all(sys.root_pairing(m, beta) == 0 for m in others):
                return C1Witness(alpha=alpha, beta=beta)
    return None


# -- conjugacy -------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyResult:
    status: str  # "yes", "no" or "unknown"
    word: tuple = ()  # reflections, as roots, applied left to right
    method: str = ""


def _normal_form(sys, members):
    """Deterministic highest-root normal form of a +/- insensitive set.

    Returns (frozenset of positive representatives, word of reflections).
    """
    word = []
    result = []

    def rec(sub_roots, items):
        if not items:
            return
        comps = subsystem_components(sys, sub_roots)
        for comp in comps:
            comp_set = set(comp)
            local = [m for m in items if m in comp_set or _neg(m) in comp_set]
            if not local:
                continue
            longs = [m for m in local if sys.length_sq(m) == max(sys.length_sq(x) for x in local)]
            target = max(longs)
            dom, w = word_to_dominant(sys, comp, target)
            word.extend(w)
            imgs = [sys.pos_rep(apply_word(sys, w, m)) for m in local]
            result.append(dom)
            rest_items = [m for m in imgs if m != dom]
            rest_roots = [
                r
                for r in comp
                if r != dom and r != _neg(dom) and strongly_orthogonal(sys, r, dom)
            ]
            # reflections inside this component fix the other components,
            # so the recursion can run per component independently
            rec(rest_roots, rest_items)

    rec(list(sys.roots), [sys.pos_rep(m) for m in members])
    return frozenset(result), tuple(word)


def _orbit_search(sys, start_members, target_test, max_size):
    """BFS over +/- insensitive set images; returns (found_canon, word) or None.

    target_test receives a canonical set image.  Words come back as simple
    reflection roots applied left to right.
    """
    start = canonical_set(sys, start_members, signs_insensitive=True)
    if target_test(start):
        return start, ()
    parents = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for i in range(sys.type.rank):
                img = canonical_set(
                    sys, [sys.simple_reflect(i, m) for m in cur], signs_insensitive=True
                )
                if img in parents:
                    continue
                if len(parents) >= max_size:
                    raise BudgetExceeded("orbit larger than the configured budget")
                parents[img] = (cur, i)
                if target_test(img):
                    word = []
                    node = img
                    while parents[node] is not None:
                        prev, idx = parents[node]
                        word.append(sys.simples[idx])
                        node = prev
                    word.reverse()
                    return img, tuple(word)
                nxt.append(img)
        frontier = nxt
    return None


def _verify_inclusion(sys, members, word, target_members):
    target = {sys.pos_rep(t) for t in target_members}
    return all(sys.pos_rep(apply_word(sys, word, m)) in target for m in members)


def is_conjugate_subset_of(sys, soset, target, exhaustive=None):
    """Decide whether some Weyl image of the set lies inside target.

    Member signs are treated as free on both sides.  Returns a
    ConjugacyResult whose word, when applied left to right, maps the set
    into target up to signs.  "no" answers are only produced by exhaustive
    search or by an invariant screen; the normal-form route answers "yes"
    or falls through.
    """
    a = [sys.check_root(m) for m in (soset.members if isinstance(soset, SOSet) else soset)]
    b = [sys.check_root(m) for m in (target.members if isinstance(target, SOSet) else target)]
    if len(a) > len(b):
        return ConjugacyResult("no", (), "size screen")
    lengths_a = sorted(sys.length_sq(m) for m in a)
    lengths_b = sorted(sys.length_sq(m) for m in b)
    if len(a) == len(b):
        if lengths_a != lengths_b:
            return ConjugacyResult("no", (), "length screen")
        nf_a, word_a = _normal_form(sys, a)
        nf_b, word_b = _normal_form(sys, b)
        if nf_a == nf_b:
            word = tuple(word_a) + tuple(reversed(word_b))
            if _verify_inclusion(sys, a, word, b):
                return ConjugacyResult("yes", word, "normal form")
    else:
        counts = {v: lengths_b.count(v) for v in set(lengths_b)}
        for v in lengths_a:
            counts[v] = counts.get(v, 0) - 1
        if any(c < 0 for c in counts.values()):
            return ConjugacyResult("no", (), "length screen")
    if exhaustive is None:
        exhaustive = sys.weyl_order() <= _budget()
    if exhaustive:
        target_canon_members = {sys.pos_rep(t) for t in b}

        def test(canon):
            return set(canon) <= target_canon_members

        found = _orbit_search(sys, a, test, _budget())
        if found is None:
            return ConjugacyResult("no", (), "orbit exhausted")
        _, word = found
        if not _verify_inclusion(sys, a, word, b):
            raise AssertionError("orbit certificate failed verification")
        return ConjugacyResult("yes", word, "orbit")
    return ConjugacyResult("unknown", (), "budget")


def require_conjugate(sys, soset, target):
    res = is_conjugate_subset_of(sys, soset, target)
    if res.status != "yes":
        raise CertificateNotFound(f"no conjugating word found ({res.method})")
    return res


# -- enumeration -----------------------------------------------------------


def enumerate_so_sets(sys, max_rank=None):
    """Representatives of the W-conjugacy classes of strongly-orthogonal sets.

    Signs are treated as free (every class has an all-positive member).
    The empty set is included.  Raises BudgetExceeded when the Weyl group
    is too large for exhaustive orbit closure.
    """
    if sys.weyl_order() > _budget():
        raise BudgetExceeded(f"|W| = {sys.weyl_order()} exceeds the budget")
    if max_rank is None:
        max_rank = sys.type.rank
    pos = list(sys.positive_roots)
    n = len(pos)
    so = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if strongly_orthogonal(sys, pos[i], pos[j]):
                so[i][j] = so[j][i] = True
    cliques = [()]

    def grow(prefix, candidates):
        for idx, c in enumerate(candidates):
            nxt = prefix + (c,)
            if len(nxt) <= max_rank:
                cliques.append(nxt)
                grow(nxt, [d for d in candidates[idx + 1 :] if so[c][d]])

    grow((), list(range(n)))
    seen_canon = {}
    for clique in cliques:
        members = [pos[i] for i in clique]
        canon = canonical_set(sys, members, signs_insensitive=True)
        if canon in seen_canon:
            continue
        orbit = _orbit_from(sys, canon)
        rep = min(orbit)
        for img in orbit:
            seen_canon[img] = rep
    reps = sorted(set(seen_canon.values()), key=lambda c: (len(c), c))
    return [so_set(sys, rep) for rep in reps]


def _orbit_from(sys, canon):
    seen = {canon}
    frontier = [canon]
    while frontier:
        nxt = []
        for cur in frontier:
            for i in range(sys.type.rank):
                img = canonical_set(
                    sys, [sys.simple_reflect(i, m) for m in cur], signs_insensitive=True
                )
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > _budget():
                        raise BudgetExceeded("orbit budget")
        frontier = nxt
    return seen


def is_maximal_so(sys, members):
    comp = so_complement(sys, members)
    return len(comp) == 0


def is_maximal_orthogonal(sys, members):
    """No root outside +/- the set is plainly orthogonal to all members."""
    member_set = {m for m in members} | {_neg(m) for m in members}
    for r in sys.roots:
        if r in member_set:
            continue
        if all(sys.root_pairing(r, m) == 0 for m in members):
            return False
    return True


@dataclass
class AnismaxReport:
    system: str
    clauses: dict

    @property
    def ok(self):
        return all(v for v in self.clauses.values() if v is not None)


def verify_anismax(sys):
    """Exhaustive check of the classification clauses for one system."""
    reps = enumerate_so_sets(sys)
    clauses = {}
    if tables.is_a2n(sys):
        clauses["every nonempty class satisfies (C1)"] = all(
            satisfies_c1(sys, rep) is not None for rep in reps if len(rep) > 0
        )
        clauses["no maximal (C1)-free set exists"] = not any(
            satisfies_c1(sys, rep) is None and is_maximal_so(sys, rep.members)
            for rep in reps
            if len(rep) > 0
        )
        return AnismaxReport(str(sys.type), clauses)
    sa = sigma_a(sys)
    c1_free_maximal = [
        rep
        for rep in reps
        if len(rep) > 0 and satisfies_c1(sys, rep) is None and is_maximal_so(sys, rep.members)
    ]
    clauses["unique maximal (C1)-free class"] = len(c1_free_maximal) == 1
    clauses["algorithm output is in that class"] = (
        len(c1_free_maximal) == 1
        and is_conjugate_subset_of(sys, sa, c1_free_maximal[0]).status == "yes"
        and len(sa) == len(c1_free_maximal[0])
    )
    clauses["maximal as plain-orthogonal set"] = is_maximal_orthogonal(sys, sa.members)
    clauses["every (C1)-free class embeds in it"] = all(
        is_conjugate_subset_of(sys, rep, sa).status == "yes"
        for rep in reps
        if satisfies_c1(sys, rep) is None
    )
    return AnismaxReport(str(sys.type), clauses)


def tabled_sigma_a(sys):
    """The tabled representative as an SOSet, in the sign-basis order."""
    return so_set(sys, tables.sign_basis(sys))


def levi_support(sys, members):
    """Simple-root indices appearing in the members (the standard Levi hull)."""
    support = set()
    for m in members:
        for i, c in enumerate(m):
            if c:
                support.add(i)
    return sorted(support)
