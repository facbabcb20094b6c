from fractions import Fraction

import pytest

from steinberg_lab import prasad, tables
from steinberg_lab.errors import NonIntegralPairing
from steinberg_lab.rootsys import build


def test_triviality_examples():
    assert prasad.prasad_trivial(build("A", 2))
    assert not prasad.prasad_trivial(build("A", 1))
    assert prasad.prasad_trivial(build("D", 4))
    assert not prasad.prasad_trivial(build("E", 7))
    assert prasad.prasad_trivial(build("E", 8))
    assert prasad.prasad_trivial(build("G", 2))


def test_triviality_matches_halfsum_oracle():
    for fam, rank in [("A", 4), ("B", 3), ("C", 4), ("C", 3), ("D", 5), ("E", 6), ("F", 4)]:
        sys = build(fam, rank)
        two_rho = [0] * rank
        for r in sys.ambient_root_table():
            if sys.is_positive(r):
                for i, c in enumerate(r):
                    two_rho[i] += c
        assert prasad.prasad_trivial(sys) == all(c % 2 == 0 for c in two_rho)


def test_chi_on_torus_e7():
    sys = build("E", 7)
    xi = tables.chi_test_coweights(sys)[0]
    assert prasad.two_rho_pairing(sys, xi) == 3
    assert prasad.chi_on_torus(sys, xi, nonsquare=True) == -1
    assert prasad.chi_on_torus(sys, xi, nonsquare=False) == 1


def test_chi_on_simple_coroots_is_trivial():
    for fam, rank in [("A", 3), ("B", 4), ("G", 2)]:
        sys = build(fam, rank)
        for i in range(rank):
            xi = [Fraction(0)] * rank
            xi[i] = Fraction(1)
            assert prasad.chi_on_torus(sys, xi, nonsquare=True) == 1


def test_chi_is_multiplicative():
    sys = build("C", 3)
    xi1 = sys.fundamental_coweight(2)
    xi2 = [Fraction(1), Fraction(0), Fraction(0)]
    both = [a + b for a, b in zip(xi1, xi2)]
    lhs = prasad.chi_on_torus(sys, both, nonsquare=True)
    rhs = prasad.chi_on_torus(sys, xi1, nonsquare=True) * prasad.chi_on_torus(
        sys, xi2, nonsquare=True
    )
    assert lhs == rhs


def test_non_integral_pairing_raises():
    sys = build("A", 1)
    with pytest.raises(NonIntegralPairing):
        prasad.chi_on_torus(sys, [Fraction(1, 3)], nonsquare=True)


def test_d2n_identity():
    out1 = prasad.d2n_character_identity(1)
    assert out1.skipped
    out2 = prasad.d2n_character_identity(2)
    assert not out2.skipped and out2.holds and out2.branch == "all-even"
    out3 = prasad.d2n_character_identity(3)
    assert out3.holds and out3.branch == "parity-match"
    out4 = prasad.d2n_character_identity(4)
    assert out4.holds and out4.branch == "all-even"
