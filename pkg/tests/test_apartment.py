from fractions import Fraction

import pytest

from steinberg_lab import apartment, tables
from steinberg_lab.apartment import (
    E_LEVEL,
    F_LEVEL,
    FacetFunctional,
    base_chambers,
    canonical_sigma_chamber,
    central_chamber,
    central_chamber_sigma,
    chambers_within,
    distance,
    e_chambers_in_f_chamber,
    extended_simple_roots,
    facet_functional,
    is_central,
    reflect,
    translate,
    wall_neighbors,
)
from steinberg_lab.errors import (
    HalfIntegralityViolation,
    LevelMismatch,
    NotAWall,
    NotTypeA2n,
    UnsupportedSigma,
)
from steinberg_lab.rootsys import build


def test_base_chambers_a1():
    sys = build("A", 1)
    cf, ce = base_chambers(sys)
    assert cf.value((1,)) == 0 and cf.value((-1,)) == 2
    assert ce.value((1,)) == 0 and ce.value((-1,)) == 1


def test_distance_basics():
    sys = build("A", 1)
    cf, ce = base_chambers(sys)
    assert distance(ce, ce) == 0
    adjacent = reflect(ce, ((1,), 0))
    assert distance(ce, adjacent) == 1
    moved = translate(ce, [1])
    assert distance(ce, moved) == 4
    moved_f = translate(cf, [1])
    assert distance(cf, moved_f) == 2
    with pytest.raises(LevelMismatch):
        distance(ce, cf)


def test_translate_identity_and_parity():
    sys = build("A", 2)
    _, ce = base_chambers(sys)
    assert translate(ce, [0, 0]) == ce
    for xi in ([1, 0], [2, -1], [1, 1]):
        assert distance(ce, translate(ce, xi)) % 2 == 0


def test_reflect_involution_and_walls():
    sys = build("A", 2)
    cf, ce = base_chambers(sys)
    wall = ((1, 0), ce.value((1, 0)))
    assert reflect(reflect(ce, wall), wall) == ce
    with pytest.raises(NotAWall):
        reflect(cf, ((1, 0), 1))  # odd wall at the coarse level


def test_chambers_within_counts():
    a1 = build("A", 1)
    _, ce = base_chambers(a1)
    shells = chambers_within(ce, 2)
    assert [len(s) for s in shells] == [1, 2, 2]
    a2 = build("A", 2)
    cf, _ = base_chambers(a2)
    shells = chambers_within(cf, 3)
    assert [len(s) for s in shells] == [1, 3, 6, 9]


def test_distance_formula_matches_bfs_gallery():
    # gallery BFS depth equals the separating-wall count
    sys = build("B", 2)
    _, ce = base_chambers(sys)
    for dist, shell in enumerate(chambers_within(ce, 4)):
        for c in shell:
            assert distance(ce, c) == dist


def test_fine_chambers_inside_coarse():
    for fam, rank, count in [("A", 1, 2), ("A", 2, 4), ("A", 4, 16)]:
        sys = build(fam, rank)
        cf, _ = base_chambers(sys)
        assert len(e_chambers_in_f_chamber(cf)) == count
    with pytest.raises(LevelMismatch):
        _, ce = base_chambers(build("A", 1))
        e_chambers_in_f_chamber(ce)


def test_central_chamber_a2_values():
    sys = build("A", 2)
    cf, _ = base_chambers(sys)
    c = central_chamber(sys, cf)
    assert c.value((-1, 0)) == 1
    assert c.value((0, -1)) == 1
    assert c.value((1, 1)) == -1
    assert central_chamber_sigma(sys) == c


def test_central_chamber_counts():
    a4 = build("A", 4)
    cf, _ = base_chambers(a4)
    cells = e_chambers_in_f_chamber(cf)
    assert sum(1 for c in cells if is_central(c)) == 1
    assert central_chamber_sigma(a4) == central_chamber(a4, cf)
    a3 = build("A", 3)
    cf3, _ = base_chambers(a3)
    assert sum(1 for c in e_chambers_in_f_chamber(cf3) if is_central(c)) == 0
    with pytest.raises(NotTypeA2n):
        central_chamber(a3, cf3)
    with pytest.raises(NotTypeA2n):
        central_chamber_sigma(build("B", 2))


def test_central_distance_three_across_walls():
    sys = build("A", 2)
    cf, _ = base_chambers(sys)
    c0 = central_chamber(sys, cf)
    neighbors = wall_neighbors(cf)
    assert len(neighbors) == 3
    for nb in neighbors.values():
        assert distance(c0, central_chamber(sys, nb)) == 3


def test_distance_doubling_on_translations():
    for fam, rank in [("A", 2), ("C", 2), ("G", 2)]:
        sys = build(fam, rank)
        cf, ce = base_chambers(sys)
        for xi in ([1, 0], [0, 1], [2, 1], [-1, 3]):
            de = distance(ce, translate(ce, xi))
            df = distance(cf, translate(cf, xi))
            assert de == 2 * df


def test_distance_doubling_from_arbitrary_chambers():
    sys = build("A", 2)
    _, ce = base_chambers(sys)
    sample = [c for shell in chambers_within(ce, 2) for c in shell]
    for c in sample:
        cf = apartment.containing_f_chamber(c)
        assert c in e_chambers_in_f_chamber(cf)
        for xi in ([1, 0], [1, -2], [0, 3]):
            de = distance(c, translate(c, xi))
            df = distance(cf, translate(cf, xi))
            assert de == 2 * df


def test_extended_simple_roots_of_base():
    sys = build("A", 2)
    _, ce = base_chambers(sys)
    assert extended_simple_roots(ce) == sorted(sys.extended_simple_set())


def test_canonical_chamber_a1():
    sys = build("A", 1)
    members = tables.sign_basis(sys)
    ch = canonical_sigma_chamber(sys, members)
    assert ch.f((1,)) == Fraction(-1, 2)
    assert ch.f((-1,)) == 1


def test_canonical_chamber_c2_long_weights():
    sys = build("C", 2)
    members = tables.sign_basis(sys)
    ch = canonical_sigma_chamber(sys, members)
    for m in members:
        assert ch.value(m) % 2 == 0  # integer values on the set
    for alpha in sys.roots:
        assert ch.value(alpha) + ch.value(tuple(-c for c in alpha)) == 1


def test_canonical_chamber_rejects_other_sets():
    sys = build("A", 3)
    # a conjugate representative that is not the tabled one
    other = tables.sigma_a_table(sys)
    with pytest.raises(UnsupportedSigma):
        canonical_sigma_chamber(sys, other)
    # sign flips of the tabled set are accepted
    flipped = [tuple(-c for c in m) for m in tables.sign_basis(sys)]
    assert canonical_sigma_chamber(sys, flipped) == canonical_sigma_chamber(
        sys, tables.sign_basis(sys)
    )


def test_facet_functional_examples():
    a1 = build("A", 1)
    m = tables.sigma_a_table(a1)
    fn = facet_functional(a1, m, {m[0]: Fraction(3, 2)})
    assert fn.value2(m[0]) == 3
    g2 = build("G", 2)
    members = tables.sigma_a_table(g2)
    fn2 = facet_functional(g2, members, {members[0]: Fraction(1, 2), members[1]: Fraction(-1, 2)})
    for alpha in g2.roots:
        assert isinstance(fn2.value2(alpha), int)


def test_facet_functional_requires_proper_half_integers():
    a1 = build("A", 1)
    m = tables.sigma_a_table(a1)
    with pytest.raises(ValueError):
        facet_functional(a1, m, {m[0]: Fraction(1)})


def test_facet_functional_violation_guard():
    # even half-unit values break half-integrality on short roots
    b2 = build("B", 2)
    members = tuple(tables.sigma_a_table(b2))
    bad = FacetFunctional(b2, members, (1, 2))
    with pytest.raises(HalfIntegralityViolation):
        for alpha in b2.roots:
            bad.value2(alpha)


def test_full_rank_facet_functionals_half_integral():
    for fam, rank in [("B", 4), ("C", 4), ("D", 4), ("F", 4), ("G", 2)]:
        sys = build(fam, rank)
        members = tables.sigma_a_table(sys)
        values = {m: Fraction(2 * i + 1, 2) for i, m in enumerate(members)}
        fn = facet_functional(sys, members, values)
        for alpha in sys.roots:
            assert fn.value2(alpha) + fn.value2(tuple(-c for c in alpha)) == 0


def test_affine_relation_identity():
    for fam, rank in [("A", 2), ("G", 2), ("B", 2)]:
        sys = build(fam, rank)
        _, ce = base_chambers(sys)
        for shell in chambers_within(ce, 2):
            for ch in shell:
                ext, rel = apartment.affine_relation(ch)
                assert sum(c * ch.value(r) for c, r in zip(rel, ext)) == 1


def test_triangle_inequality_sampled():
    sys = build("A", 2)
    _, ce = base_chambers(sys)
    ball = [c for shell in chambers_within(ce, 3) for c in shell]
    sample = ball[::3]
    for a in sample:
        for b in sample:
            for c in sample:
                assert distance(a, c) <= distance(a, b) + distance(b, c)
