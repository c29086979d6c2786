"""Boltzmann weight tables for the seven vertex families and entry functions
for the six R-matrices.

Vertex labels follow the reading (a, b; c, d) = (left, bottom; right, top),
so conservation is a + b = c + d.  R-matrix entries use the reading
(a, b, c, d) = (in-top, in-bottom, out-top, out-bottom): the line entering
at the top left exits at the bottom right carrying d, the line entering at
the bottom left exits at the top right carrying c.  The first spectral
argument is always attached to the line entering at the top.

The deformation parameters alpha and beta stay formal (variables ``a`` and
``b``); specializations happen by substitution at the caller.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .algebra import ALPHA, BETA, RationalFunction, as_rf

ONE = RationalFunction.one()
ZERO = RationalFunction.zero()


class LabelOutOfRange(ValueError):
    """A fermionic line was given a label outside {0, 1}, or a negative label."""


class UndefinedAtBetaZero(ZeroDivisionError):
    """The bosonic-row r-matrix has beta in a denominator."""


class WeightModel(Enum):
    ROW_G = "row-G"
    ROW_G_DUAL = "row-G-dual"
    ROW_DUAL_G = "row-dual-g"
    COL_G = "col-G"
    COL_DUAL_G = "col-dual-g"
    J_ROW = "j-row"
    J_ROW_DUAL = "j-row-dual"


class RMatrixFamily(Enum):
    FIVE_VERTEX_R = "five-vertex-R"
    ROW_DUAL_R = "row-dual-r"
    COL_G_R = "col-G-R"
    COL_DUAL_R = "col-dual-r"
    J_R = "j-R"
    MIXED_R = "mixed-R"


#: families whose auxiliary (horizontal) line carries labels in {0, 1}
FERMIONIC_MODELS = frozenset(
    {WeightModel.ROW_G, WeightModel.ROW_G_DUAL, WeightModel.J_ROW, WeightModel.J_ROW_DUAL}
)

#: models whose natural partition encoding is by column multiplicities
COLUMN_ENCODED_MODELS = frozenset(
    {WeightModel.COL_G, WeightModel.COL_DUAL_G, WeightModel.J_ROW, WeightModel.J_ROW_DUAL}
)

#: models acting as dual transfer matrices (right boundary label 1)
DUAL_BOUNDARY_MODELS = frozenset({WeightModel.ROW_G_DUAL, WeightModel.J_ROW_DUAL})


def _check_labels(model: WeightModel, a: int, b: int, c: int, d: int) -> None:
    if min(a, b, c, d) < 0:
        raise LabelOutOfRange(f"negative edge label on {model.value}: {(a, b, c, d)}")
    if model in FERMIONIC_MODELS and not (a in (0, 1) and c in (0, 1)):
        raise LabelOutOfRange(
            f"auxiliary labels of {model.value} must lie in {{0,1}}: a={a}, c={c}"
        )


def vertex_weight(model: WeightModel, a: int, b: int, c: int, d: int, x) -> RationalFunction:
    """Boltzmann weight of one vertex with spectral parameter x.

    Total on admissible labels: returns 0 whenever conservation a+b = c+d or
    the family's support condition fails.
    """
    _check_labels(model, a, b, c, d)
    if a + b != c + d:
        return ZERO
    x = as_rf(x)

    if model is WeightModel.ROW_G:
        if a == b == c == d == 0:
            return ONE
        if a == 1:
            return x / (ONE - ALPHA * x)
        return (ONE + BETA * x) / (ONE - ALPHA * x)

    if model is WeightModel.ROW_G_DUAL:
        # dual tiles: flip upside down and swap the 0/1 auxiliary labels
        return vertex_weight(WeightModel.ROW_G, 1 - a, d, 1 - c, b, x)

    if model is WeightModel.ROW_DUAL_G:
        if a == 0:
            return ONE
        if a > d:
            return (ALPHA + BETA) ** (a - d - 1) * (x + ALPHA) * BETA**d
        return BETA ** (a - 1) * x

    if model is WeightModel.COL_G:
        if b < c:
            return ZERO
        w = (x / (ONE - ALPHA * x)) ** a
        if b > c:
            w = w * (ONE + BETA * x) / (ONE - ALPHA * x)
        return w

    if model is WeightModel.COL_DUAL_G:
        if a == 0:
            return ONE
        if a > d:
            return (ALPHA + BETA) ** (a - d - 1) * BETA * (x + ALPHA) ** d
        return x * (x + ALPHA) ** (a - 1)

    if model is WeightModel.J_ROW:
        if a == 0:
            return ONE
        if d == 0:
            return x + ONE
        return x

    if model is WeightModel.J_ROW_DUAL:
        return vertex_weight(WeightModel.J_ROW, 1 - a, d, 1 - c, b, x)

    raise ValueError(f"unknown weight model {model!r}")


def vertex_weight_inhom(model: WeightModel, a, b, c, d, x, z) -> RationalFunction:
    """Weight with a column inhomogeneity: spectral parameter x/z."""
    return vertex_weight(model, a, b, c, d, as_rf(x) / as_rf(z))


_FERMIONIC_R_LINES = {
    RMatrixFamily.FIVE_VERTEX_R: (True, True),
    RMatrixFamily.ROW_DUAL_R: (False, False),
    RMatrixFamily.COL_G_R: (False, False),
    RMatrixFamily.COL_DUAL_R: (False, False),
    RMatrixFamily.J_R: (True, True),
    RMatrixFamily.MIXED_R: (True, False),  # top line fermionic, bottom bosonic
}


def rmatrix_line_types(family: RMatrixFamily) -> tuple[bool, bool]:
    """(top line fermionic?, bottom line fermionic?)."""
    return _FERMIONIC_R_LINES[family]


def _check_rlabels(family: RMatrixFamily, a, b, c, d) -> None:
    if min(a, b, c, d) < 0:
        raise LabelOutOfRange(f"negative edge label on {family.value}: {(a, b, c, d)}")
    top_f, bot_f = _FERMIONIC_R_LINES[family]
    # the top-entering line exits at the bottom right (d); the bottom one at c
    if top_f and not (a in (0, 1) and d in (0, 1)):
        raise LabelOutOfRange(f"fermionic labels out of range on {family.value}: a={a}, d={d}")
    if bot_f and not (b in (0, 1) and c in (0, 1)):
        raise LabelOutOfRange(f"fermionic labels out of range on {family.value}: b={b}, c={c}")


def rmatrix_entry(
    family: RMatrixFamily, a: int, b: int, c: int, d: int, x, y,
    alpha=None, beta=None,
) -> RationalFunction:
    """Entry of an R-matrix; zero off conservation a+b = c+d.

    Optional alpha/beta specializations are substituted into the entry; for
    the bosonic-row r-matrix, beta = 0 is rejected (beta divides entries).
    """
    _check_rlabels(family, a, b, c, d)
    if family is RMatrixFamily.ROW_DUAL_R and beta is not None and Fraction(beta) == 0:
        raise UndefinedAtBetaZero("the bosonic-row r-matrix is not defined at beta = 0")
    w = _rmatrix_entry_formal(family, a, b, c, d, as_rf(x), as_rf(y))
    subs = {}
    if alpha is not None:
        subs["a"] = as_rf(Fraction(alpha))
    if beta is not None:
        subs["b"] = as_rf(Fraction(beta))
    if subs and not w.is_zero():
        w = w.substitute(subs)
    return w


def _rmatrix_entry_formal(family, a, b, c, d, x, y) -> RationalFunction:
    if a + b != c + d:
        return ZERO

    if family is RMatrixFamily.FIVE_VERTEX_R:
        if a == b == c == d == 0 or a == b == c == d == 1:
            return ONE
        cross = ((ONE + BETA * x) * y) / ((ONE + BETA * y) * x)
        if (a, b, c, d) == (0, 1, 0, 1):
            return cross
        if (a, b, c, d) == (0, 1, 1, 0):
            return ZERO
        if (a, b, c, d) == (1, 0, 1, 0):
            return ONE
        if (a, b, c, d) == (1, 0, 0, 1):
            return ONE - cross
        return ZERO

    if family is RMatrixFamily.J_R:
        if a == b == c == d == 0 or a == b == c == d == 1:
            return ONE
        if (a, b, c, d) == (0, 1, 0, 1):
            return y / x
        if (a, b, c, d) == (0, 1, 1, 0):
            return ZERO
        if (a, b, c, d) == (1, 0, 1, 0):
            return ONE
        if (a, b, c, d) == (1, 0, 0, 1):
            return ONE - y / x
        return ZERO

    if family is RMatrixFamily.ROW_DUAL_R:
        # first-match cases on (in-bottom b, out-bottom d):
        if b > d:
            return ZERO
        if b == d == 0:
            return ONE
        if b == d:
            return y / x
        tail = (ONE - y / x) * (ONE - y / BETA) ** (a - c - 1)
        if b == 0:
            return tail
        return tail * (y / BETA)

    if family is RMatrixFamily.COL_G_R:
        # prefactor uses the in-top label; support condition on (b, d)
        if b < d:
            return ZERO
        X = x / (ONE - ALPHA * x)
        Y = y / (ONE - ALPHA * y)
        pref = (X / Y) ** a
        if b == d:
            return pref
        return pref * (ONE - X / Y)

    if family is RMatrixFamily.COL_DUAL_R:
        # first-match order: 0 when in-bottom < out-bottom, then cases on (a, c)
        if b < d:
            return ZERO
        if a == c == 0:
            return ONE
        ratio = (y + ALPHA) / (x + ALPHA)
        if a == c:
            return (x / y) * ratio ** (1 - a)
        if a == 0:
            return ONE - x / y
        return (x / y) * (ratio - ONE) * ratio ** (-a)

    if family is RMatrixFamily.MIXED_R:
        # (k, i, l, j) = (a, b, c, d): k, j fermionic; i, l bosonic
        if a == b == c == d == 0:
            return ONE
        if d == 1 and a == 1 and b == 0 and c == 0:
            return ONE - x * y
        if a == 0 and c == 0 and b == 1 and d == 1:
            return x * y
        if a == 1:
            return ONE - x * BETA
        return x * BETA

    raise ValueError(f"unknown R-matrix family {family!r}")


_CASE_ORDERS = {
    RMatrixFamily.FIVE_VERTEX_R: (
        "dense 4x4 table, cases disjoint: diagonal 1s, crossing entry, its complement",
    ),
    RMatrixFamily.J_R: (
        "dense 4x4 table, cases disjoint: beta = 0 limit of the five-vertex table",
    ),
    RMatrixFamily.ROW_DUAL_R: (
        "0 when in-bottom > out-bottom",
        "1 when in-bottom = out-bottom = 0",
        "y/x when in-bottom = out-bottom > 0",
        "(1 - y/x)(1 - y/beta)^(a-c-1) when in-bottom = 0",
        "(1 - y/x)(1 - y/beta)^(a-c-1) (y/beta) when in-bottom > 0",
    ),
    RMatrixFamily.COL_G_R: (
        "0 when in-bottom < out-bottom",
        "prefactor alone when in-bottom = out-bottom",
        "prefactor times (1 - X/Y) otherwise",
    ),
    RMatrixFamily.COL_DUAL_R: (
        "0 when in-bottom < out-bottom",
        "1 when k = l = 0",
        "(x/y)((y+alpha)/(x+alpha))^(1-k) when k = l > 0",
        "1 - x/y when k = 0",
        "(x/y)((y+alpha)/(x+alpha) - 1)((y+alpha)/(x+alpha))^(-k) when k > 0",
    ),
    RMatrixFamily.MIXED_R: (
        "1 when all labels are 0",
        "1 - x y when j = k = 1 and i = l = 0",
        "x y when k = l = 0 and i = j = 1",
        "1 - x beta when k = 1",
        "x beta when k = 0",
    ),
}


def rmatrix_case_precedence(family: RMatrixFamily) -> tuple[str, ...]:
    """First-match case order used by rmatrix_entry: most specific first."""
    return _CASE_ORDERS[family]
