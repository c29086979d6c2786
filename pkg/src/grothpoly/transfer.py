"""Single-row transfer-matrix elements and the polynomial constructors built
from them: canonical Grothendieck polynomials (row and column models), their
duals, the weak dual family, and the inhomogeneous generalised variants.

A single row is scanned right to left.  The right boundary label is 0 (or 1
for the dual tile sets); local conservation then determines every left label
as a = c + d - b, and the configuration weight is the product of vertex
weights.  Matrix elements read <mu|T(x)|lam> = row weight with bottom
occupancies encoding mu and top occupancies encoding lam.  The n-variable
polynomials are sums over chains of partitions, empty = mu0 <= mu1 <= ... <=
mun = lam, of products of single-row elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import MultiPoly, RationalFunction, as_rf
from .factored import FactorRegistry
from .models import (
    COLUMN_ENCODED_MODELS,
    DUAL_BOUNDARY_MODELS,
    FERMIONIC_MODELS,
    LabelOutOfRange,
    WeightModel,
    vertex_weight,
)
from .partitions import (
    check_partition,
    column_multiplicities,
    conjugate,
    horizontal_strip_subs,
    row_multiplicities,
    subpartitions,
    vertical_strip_subs,
)

ONE = RationalFunction.one()
ZERO = RationalFunction.zero()

_DUAL_OF = {WeightModel.ROW_G: WeightModel.ROW_G_DUAL, WeightModel.J_ROW: WeightModel.J_ROW_DUAL}


class DifferencePropertyViolation(ValueError):
    """Inhomogeneities requested for a model without the difference property."""


@dataclass(frozen=True)
class TransferSpec:
    """One transfer matrix: weight family, tile set, site count, and optional
    per-site inhomogeneities and alpha/beta substitutions."""

    model: WeightModel
    dual: bool = False
    sites: int | None = None
    inhomogeneities: tuple | None = None
    specialize: tuple | None = None  # pairs (var, value), substituted per vertex

    def __post_init__(self):
        if self.dual and self.model not in _DUAL_OF:
            raise ValueError(f"{self.model.value} has no dual tile set")

    @property
    def weight_model(self) -> WeightModel:
        return _DUAL_OF[self.model] if self.dual else self.model

    @property
    def right_boundary(self) -> int:
        return 1 if self.weight_model in DUAL_BOUNDARY_MODELS else 0

    def encode(self, lam, nsites):
        if self.model in COLUMN_ENCODED_MODELS:
            return column_multiplicities(lam, nsites)
        return row_multiplicities(lam, nsites)

    def min_sites(self, lam) -> int:
        if self.model in COLUMN_ENCODED_MODELS:
            return len(lam)
        return lam[0] if lam else 0


def row_configuration_weight(spec: TransferSpec, bottom, top, x) -> RationalFunction:
    """Weight of the unique single-row configuration with the given bottom
    and top occupancies; 0 when some label leaves the admissible range."""
    model = spec.weight_model
    fermionic = model in FERMIONIC_MODELS
    nsites = max(len(bottom), len(top), spec.sites or 0)
    x = as_rf(x)
    subs = dict(spec.specialize) if spec.specialize else None
    weight = ONE
    c = spec.right_boundary
    for i in range(nsites - 1, -1, -1):
        b = bottom[i] if i < len(bottom) else 0
        d = top[i] if i < len(top) else 0
        a = c + d - b
        if a < 0 or (fermionic and a > 1):
            return ZERO
        if spec.inhomogeneities is not None:
            xi = x / as_rf(spec.inhomogeneities[i])
        else:
            xi = x
        w = vertex_weight(model, a, b, c, d, xi)
        if subs and not w.is_zero():
            w = w.substitute(subs)
        if w.is_zero():
            return ZERO
        weight = weight * w
        c = a
    return weight


def transfer_element(spec: TransferSpec, mu, lam, x) -> RationalFunction:
    """Matrix element <mu|T(x)|lam> under the spec's encoding."""
    mu = check_partition(mu)
    lam = check_partition(lam)
    nsites = max(spec.min_sites(mu), spec.min_sites(lam), spec.sites or 0)
    return row_configuration_weight(
        spec, spec.encode(mu, nsites), spec.encode(lam, nsites), x
    )


_WEIGHT_PROBES = (
    (0, 0, 0, 0), (1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 1, 1), (1, 0, 1, 0),
    (2, 0, 0, 2), (1, 1, 0, 2), (2, 1, 1, 2), (0, 2, 1, 1),
)


def _seed_atoms(spec: TransferSpec, variables):
    """Denominator atoms that single-row weights can produce, one spectral
    variable at a time (probing the weight table covers every tile shape)."""
    model = spec.weight_model
    subs = dict(spec.specialize) if spec.specialize else None
    dens = []
    nsites = spec.sites or 1
    for var in variables:
        xs = [RationalFunction.var(var)]
        if spec.inhomogeneities is not None:
            xs = [xs[0] / as_rf(z) for z in spec.inhomogeneities[:nsites]]
        for x in xs:
            for labels in _WEIGHT_PROBES:
                try:
                    w = vertex_weight(model, *labels, x)
                except LabelOutOfRange:
                    continue
                if subs and not w.is_zero():
                    w = w.substitute(subs)
                if not w.is_zero() and not w.den.is_constant():
                    dens.append(w.den)
    return dens


def _chain_sum(elem_fn, steps_fn, lam, variables, spec, inner=()):
    """Sum over chains inner = mu0 <= ... <= mun = lam of element products;
    elem_fn(prev, nxt, var) supplies the single-row factor for one step.

    Accumulation happens over a factored-denominator basis: the only
    denominators are products of the weight-table atoms, so additions align
    exponents instead of running polynomial gcds.
    """
    reg = FactorRegistry(_seed_atoms(spec, variables))
    memo: dict = {}
    elem_cache: dict = {}

    def elem(prev, mu, k):
        key = (prev, mu, k)
        got = elem_cache.get(key)
        if got is None:
            got = reg.from_rf(elem_fn(prev, mu, variables[k - 1]))
            elem_cache[key] = got
        return got

    def value(mu, k):
        if k == 0:
            return reg.one() if mu == inner else reg.zero()
        key = (mu, k)
        got = memo.get(key)
        if got is not None:
            return got
        total = reg.zero()
        for prev in steps_fn(mu):
            below = value(prev, k - 1)
            if below.is_zero():
                continue
            e = elem(prev, mu, k)
            if e.is_zero():
                continue
            total = total + below * e
        memo[key] = total
        return total

    return value(lam, len(variables)).to_rf()


def _default_vars(n: int, variables=None):
    if variables is not None:
        return list(variables)
    return [f"x{i}" for i in range(1, n + 1)]


def _direct_elem(spec):
    cache: dict = {}

    def elem(prev, nxt, var):
        got = cache.get((prev, nxt))
        if got is None:
            got = transfer_element(spec, prev, nxt, RationalFunction.var("x0"))
            cache[(prev, nxt)] = got
        return got if got.is_zero() else got.rename_vars({"x0": var})

    return elem


def _dual_elem(spec):
    # dual route: the step factor is <nxt|T*(x)|prev>, bottom = nxt, top = prev
    cache: dict = {}

    def elem(prev, nxt, var):
        got = cache.get((prev, nxt))
        if got is None:
            got = transfer_element(spec, nxt, prev, RationalFunction.var("x0"))
            cache[(prev, nxt)] = got
        return got if got.is_zero() else got.rename_vars({"x0": var})

    return elem


def groth_poly(lam, n: int, encoding: str = "row", variables=None) -> RationalFunction:
    """Canonical Grothendieck polynomial in n variables, formal alpha/beta."""
    lam = check_partition(lam)
    xs = _default_vars(n, variables)
    model = WeightModel.ROW_G if encoding == "row" else WeightModel.COL_G
    spec = TransferSpec(model, sites=TransferSpec(model).min_sites(lam))
    return _chain_sum(_direct_elem(spec), horizontal_strip_subs, lam, xs, spec)


def groth_poly_dual_route(lam, n: int, variables=None) -> RationalFunction:
    """Same polynomial via the dual tiles and right boundary 1."""
    lam = check_partition(lam)
    xs = _default_vars(n, variables)
    spec = TransferSpec(
        WeightModel.ROW_G, dual=True, sites=TransferSpec(WeightModel.ROW_G).min_sites(lam)
    )
    return _chain_sum(_dual_elem(spec), horizontal_strip_subs, lam, xs, spec)


def dual_groth_poly(lam, n: int, encoding: str = "row", variables=None) -> MultiPoly:
    """Dual canonical Grothendieck polynomial; always a polynomial."""
    lam = check_partition(lam)
    xs = _default_vars(n, variables)
    model = WeightModel.ROW_DUAL_G if encoding == "row" else WeightModel.COL_DUAL_G
    spec = TransferSpec(model, sites=TransferSpec(model).min_sites(lam))
    return _chain_sum(_direct_elem(spec), subpartitions, lam, xs, spec).as_poly()


def j_poly(lam, n: int, route: str = "direct", variables=None) -> MultiPoly:
    """Weak dual Grothendieck polynomial j_lam = g^(1,0) of the conjugate."""
    lam = check_partition(lam)
    xs = _default_vars(n, variables)
    base = TransferSpec(WeightModel.J_ROW)
    if route == "direct":
        spec = TransferSpec(WeightModel.J_ROW, sites=base.min_sites(lam))
        val = _chain_sum(_direct_elem(spec), vertical_strip_subs, lam, xs, spec)
    elif route == "dual":
        spec = TransferSpec(WeightModel.J_ROW, dual=True, sites=base.min_sites(lam))
        val = _chain_sum(_dual_elem(spec), vertical_strip_subs, lam, xs, spec)
    else:
        raise ValueError(f"unknown route {route!r}")
    return val.as_poly()


_GEN_KINDS = ("G", "g", "J", "j", "s_r", "s_c")


def generalized_poly(kind: str, lam, n: int, z=None, alpha=1, variables=None) -> RationalFunction:
    """Inhomogeneous generalised polynomials: variables z_j attach to the
    vertical lines, entering every weight through the ratio x/z_j.

    Pairings (model, alpha/beta specialization, encoding target):
      G   column G-model at (0, -alpha) on lam;
      g   column g-model at (0, alpha) on lam;
      J   row G-model at (-alpha, 0) on the conjugate;
      j   row g-model at (alpha, 0) on the conjugate;
      s_r row G-model at (0, 0) on lam;
      s_c column G-model at (0, 0) on lam.
    """
    if kind not in _GEN_KINDS:
        raise DifferencePropertyViolation(
            f"kind {kind!r} is not one of the admissible pairings {_GEN_KINDS}"
        )
    lam = check_partition(lam)
    al = as_rf(alpha)
    if kind == "G":
        model, target, steps, subs = WeightModel.COL_G, lam, horizontal_strip_subs, {"a": as_rf(0), "b": -al}
    elif kind == "g":
        model, target, steps, subs = WeightModel.COL_DUAL_G, lam, subpartitions, {"a": as_rf(0), "b": al}
    elif kind == "J":
        model, target, steps, subs = WeightModel.ROW_G, conjugate(lam), horizontal_strip_subs, {"a": -al, "b": as_rf(0)}
    elif kind == "j":
        model, target, steps, subs = WeightModel.ROW_DUAL_G, conjugate(lam), subpartitions, {"a": al, "b": as_rf(0)}
    elif kind == "s_r":
        model, target, steps, subs = WeightModel.ROW_G, lam, horizontal_strip_subs, {"a": as_rf(0), "b": as_rf(0)}
    else:  # s_c
        model, target, steps, subs = WeightModel.COL_G, lam, horizontal_strip_subs, {"a": as_rf(0), "b": as_rf(0)}

    nsites = TransferSpec(model).min_sites(target)
    if z is None:
        zs = tuple(RationalFunction.var(f"z{j}") for j in range(1, nsites + 1))
    else:
        zs = tuple(as_rf(v) for v in z)
        if len(zs) < nsites:
            raise ValueError(f"need at least {nsites} inhomogeneities for {lam}")
    spec = TransferSpec(
        model, sites=nsites, inhomogeneities=zs[:nsites] if nsites else (),
        specialize=tuple(sorted(subs.items())),
    )
    xs = _default_vars(n, variables)
    return _chain_sum(_direct_elem(spec), steps, target, xs, spec)


def skew_groth_poly(outer, inner, variables, encoding: str = "row") -> RationalFunction:
    """Multivariable skew canonical Grothendieck polynomial: chain sum of
    horizontal strips from inner to outer."""
    outer, inner = check_partition(outer), check_partition(inner)
    model = WeightModel.ROW_G if encoding == "row" else WeightModel.COL_G
    spec = TransferSpec(model, sites=TransferSpec(model).min_sites(outer))
    return _chain_sum(_direct_elem(spec), horizontal_strip_subs, outer, list(variables), spec, inner=inner)


def skew_dual_groth_poly(outer, inner, variables, encoding: str = "row") -> RationalFunction:
    """Multivariable skew dual polynomial: chain sum over subpartition steps."""
    outer, inner = check_partition(outer), check_partition(inner)
    model = WeightModel.ROW_DUAL_G if encoding == "row" else WeightModel.COL_DUAL_G
    spec = TransferSpec(model, sites=TransferSpec(model).min_sites(outer))
    return _chain_sum(_direct_elem(spec), subpartitions, outer, list(variables), spec, inner=inner)
