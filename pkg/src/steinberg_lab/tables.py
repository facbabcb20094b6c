"""Classified strongly-orthogonal sets and the ordered sign bases.

Classical entries are written in the ambient epsilon coordinates and
translated to simple-root coordinates through the plate realizations;
exceptional entries are written over the simple roots directly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotApplicable
from .rootsys import _add, _basis, _neg, _scale, _sub


def _amb(sys, vec):
    return sys.from_ambient(vec)


def _eps(sys, i):
    dim = len(sys._ambient_simples[0])
    return _basis(dim, i - 1)


def _combo(sys, coeffs):
    """Integer combination of simple roots given as a coefficient list."""
    d = sys.type.rank
    out = [0] * d
    for i, c in coeffs.items():
        out[i - 1] = c
    return tuple(out)


def is_a2n(sys):
    return sys.type.family == "A" and sys.type.rank % 2 == 0


def sigma_a_table(sys):
    """The classified maximal strongly-orthogonal set, first tabled form."""
    fam, d = sys.type.family, sys.type.rank
    if is_a2n(sys):
        raise NotApplicable("no such set exists in type A of even rank")
    if fam == "A":
        n = (d + 1) // 2
        return [
            _amb(sys, _add(_neg(_eps(sys, i)), _eps(sys, 2 * n + 1 - i))) for i in range(1, n + 1)
        ]
    if fam == "B":
        n = d // 2
        out = []
        for i in range(1, n + 1):
            a = _eps(sys, 2 * i - 1)
            b = _eps(sys, 2 * i)
            out.append(_amb(sys, _sub(_neg(a), b)))
            out.append(_amb(sys, _sub(b, a)))
        if d % 2 == 1:
            out.append(_amb(sys, _neg(_eps(sys, d))))
        return out
    if fam == "C":
        return [_amb(sys, _scale(-2, _eps(sys, i))) for i in range(1, d + 1)]
    if fam == "D":
        n = d // 2
        out = []
        for i in range(1, n + 1):
            a = _eps(sys, 2 * i - 1)
            b = _eps(sys, 2 * i)
            out.append(_amb(sys, _sub(_neg(a), b)))
            out.append(_amb(sys, _sub(b, a)))
        return out
    if fam == "G":
        return [_neg(sys.highest_root), _combo(sys, {1: -1})]
    if fam == "F":
        return [
            _neg(sys.highest_root),
            _combo(sys, {2: -1, 3: -2, 4: -2}),
            _combo(sys, {2: -1, 3: -2}),
            _combo(sys, {2: -1}),
        ]
    if fam == "E" and d == 6:
        return [
            _neg(sys.highest_root),
            _combo(sys, {1: -1, 3: -1, 4: -1, 5: -1, 6: -1}),
            _combo(sys, {3: -1, 4: -1, 5: -1}),
            _combo(sys, {4: -1}),
        ]
    if fam == "E" and d == 7:
        return [
            _neg(sys.highest_root),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -2, 6: -2, 7: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {5: -1}),
            _combo(sys, {7: -1}),
        ]
    if fam == "E" and d == 8:
        return [
            _neg(sys.highest_root),
            _combo(sys, {1: -2, 2: -2, 3: -3, 4: -4, 5: -3, 6: -2, 7: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -2, 6: -2, 7: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {5: -1}),
            _combo(sys, {7: -1}),
        ]
    raise NotApplicable(str(sys.type))


def sigma_a_alt_table(sys):
    """Alternative tabled representative (more negated simple roots), or None."""
    fam, d = sys.type.family, sys.type.rank
    if fam == "A" and d % 2 == 1:
        n = (d + 1) // 2
        return [_combo(sys, {2 * i - 1: -1}) for i in range(1, n + 1)]
    if fam == "D" and d % 2 == 1:
        n = (d - 1) // 2
        out = []
        for i in range(1, n + 1):
            a = _eps(sys, 2 * i)
            b = _eps(sys, 2 * i + 1)
            out.append(_amb(sys, _sub(_neg(a), b)))
            out.append(_amb(sys, _sub(b, a)))
        return out
    if fam == "E" and d == 6:
        return [
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {5: -1}),
        ]
    return None


def sign_basis(sys):
    """The ordered basis (beta_1 ... beta_r) used by the sign calculus.

    The order matters: bit i of every sign vector refers to beta_i.  Types
    with an alternative table use it (indices shifted for odd D); the rest
    use the first table, reordered as in the uniqueness argument.
    """
    fam, d = sys.type.family, sys.type.rank
    if is_a2n(sys):
        raise NotApplicable("no sign basis in type A of even rank")
    if fam == "A":
        return sigma_a_alt_table(sys)
    if fam in ("B", "C"):
        return sigma_a_table(sys)
    if fam == "D":
        if d % 2 == 0:
            return sigma_a_table(sys)
        return sigma_a_alt_table(sys)
    if fam == "G":
        return [_combo(sys, {1: -1}), _neg(sys.highest_root)]
    if fam == "F":
        return [
            _neg(sys.highest_root),
            _combo(sys, {2: -1}),
            _combo(sys, {2: -1, 3: -2}),
            _combo(sys, {2: -1, 3: -2, 4: -2}),
        ]
    if fam == "E" and d == 6:
        return [
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {5: -1}),
        ]
    if fam == "E" and d == 7:
        return [
            _neg(sys.highest_root),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -2, 6: -2, 7: -1}),
            _combo(sys, {5: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
            _combo(sys, {7: -1}),
        ]
    if fam == "E" and d == 8:
        return [
            _neg(sys.highest_root),
            _combo(sys, {2: -1}),
            _combo(sys, {3: -1}),
            _combo(sys, {1: -2, 2: -2, 3: -3, 4: -4, 5: -3, 6: -2, 7: -1}),
            _combo(sys, {5: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -2, 6: -2, 7: -1}),
            _combo(sys, {7: -1}),
            _combo(sys, {2: -1, 3: -1, 4: -2, 5: -1}),
        ]
    raise NotApplicable(str(sys.type))


def expected_sigma_a_size(sys):
    """Cardinality of the classified set, from the tables."""
    fam, d = sys.type.family, sys.type.rank
    if fam == "A":
        return (d + 1) // 2
    if fam == "D" and d % 2 == 1:
        return d - 1
    if fam == "E" and d == 6:
        return 4
    return d


def chi_test_coweights(sys):
    """Representatives of Y / Y^2 used by the character-compatibility check.

    Returned as rational coweights over the simple coroots.
    """
    fam, d = sys.type.family, sys.type.rank
    if fam == "A" and d % 2 == 1:
        return [sys.fundamental_coweight(0)]
    if fam == "B":
        return [sys.fundamental_coweight(0)]
    if fam == "C":
        return [sys.fundamental_coweight(d - 1)]
    if fam == "D":
        out = [sys.fundamental_coweight(d - 1)]
        if d % 2 == 0:
            out.append(sys.fundamental_coweight(0))
        return out
    if fam == "E" and d == 6:
        third = Fraction(1, 3)
        xi = [0] * 6
        xi[0], xi[2], xi[4], xi[5] = third, -third, third, -third
        return [tuple(Fraction(x) for x in xi)]
    if fam == "E" and d == 7:
        half = Fraction(1, 2)
        xi = [0] * 7
        xi[1], xi[4], xi[6] = half, half, half
        return [tuple(Fraction(x) for x in xi)]
    # E8, F4, G2: the relevant group is trivial.
    return []
