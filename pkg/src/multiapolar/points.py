"""Point configurations, their degreewise ideals, and Hilbert functions.

A configuration is a list of points with positive multiplicities; a point
of multiplicity mu contributes the vanishing conditions of all divided-power
(Hasse) derivatives of order < mu.  The degree-D piece of the ideal is the
kernel of the resulting condition matrix, and the Hilbert function is its
codimension.  Derivative rows are exact in characteristic 0; over a prime
field they are accepted only when the prime exceeds the total degree in
play, otherwise the computation refuses rather than return a wrong rank.

Randomized checks of the generic-Hilbert-function behaviour ("a general
configuration imposes independent conditions") draw all coordinates from a
counter-based seeded stream, so every report is reproducible.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .apolar import DualElement
from .exactla import DEFAULT_PRIME, DegreewiseSubspace, Field, Subspace, kernel, rank
from .rng import CounterRng
from .ring import Degree, Space, Window, _compositions, deg_total


class SmallCharacteristicError(ValueError):
    """Raised when fat-point derivative conditions would be computed over a
    prime no larger than the total degree involved."""


@dataclass(frozen=True)
class Point:
    """One point of the product, one nonzero coordinate block per factor."""

    blocks: tuple[tuple, ...]
    multiplicity: int = 1


@dataclass(frozen=True)
class PointConfiguration:
    space: Space
    field: Field
    points: tuple[Point, ...]

    @classmethod
    def make(cls, space: Space, field: Field, points) -> "PointConfiguration":
        """Build a configuration, normalizing each block projectively
        (first nonzero coordinate scaled to 1) so points compare canonically."""
        normalized = []
        for pt in points:
            if isinstance(pt, Point):
                blocks, mult = pt.blocks, pt.multiplicity
            else:
                blocks, mult = pt
            if mult < 1:
                raise ValueError("multiplicity must be positive")
            if len(blocks) != space.k:
                raise ValueError("wrong number of coordinate blocks")
            norm_blocks = []
            for i, block in enumerate(blocks):
                if len(block) != space.factors[i] + 1:
                    raise ValueError("coordinate block has wrong length")
                vals = [field.convert(x) for x in block]
                lead = next((x for x in vals if x != 0), None)
                if lead is None:
                    raise ValueError("zero coordinate block")
                inv = field.inv(lead)
                norm_blocks.append(tuple(field.mul(inv, x) for x in vals))
            normalized.append(Point(tuple(norm_blocks), mult))
        return cls(space, field, tuple(normalized))

    def degree(self) -> int:
        """Total degree: a point of multiplicity mu on an n-fold counts
        C(n + mu - 1, n)."""
        n = self.space.dim
        return sum(math.comb(n + p.multiplicity - 1, n) for p in self.points)

    def support(self) -> tuple[tuple[tuple, ...], ...]:
        return tuple(p.blocks for p in self.points)

    def is_simple(self) -> bool:
        return all(p.multiplicity == 1 for p in self.points)

    def is_subconfiguration_of(self, other: "PointConfiguration") -> bool:
        mults = {p.blocks: p.multiplicity for p in other.points}
        return all(mults.get(p.blocks, 0) >= p.multiplicity for p in self.points)

    def to_json(self) -> dict:
        def scalar(x):
            if self.field.prime is not None:
                return int(x)
            if x.denominator != 1:
                return f"{x.numerator}/{x.denominator}"
            return int(x)
        return {
            "field": str(self.field),
            "points": [{"coords": [[scalar(x) for x in b] for b in p.blocks],
                        "mult": p.multiplicity} for p in self.points],
        }

    @classmethod
    def from_json(cls, space: Space, data: dict) -> "PointConfiguration":
        field = Field.parse(data["field"])
        pts = []
        for p in data["points"]:
            blocks = tuple(
                tuple(field.parse_scalar(str(x)) for x in block)
                for block in p["coords"])
            pts.append(Point(blocks, p.get("mult", 1)))
        return cls.make(space, field, pts)


def random_configuration(space: Space, field: Field, r: int, rng: CounterRng,
                         multiplicity: int = 1) -> PointConfiguration:
    pts = []
    for _ in range(r):
        blocks = tuple(rng.nonzero_vector(field, a + 1) for a in space.factors)
        pts.append(Point(blocks, multiplicity))
    return PointConfiguration.make(space, field, pts)


# ---------------------------------------------------------------------------
# Evaluation duals and condition matrices

def _flat_coords(point: Point) -> tuple:
    return tuple(x for block in point.blocks for x in block)

def _power_table(field: Field, coords, max_exp: int):
    table = []
    for x in coords:
        table.append([field.power(x, t) for t in range(max_exp + 1)])
    return table


def evaluation_dual(space: Space, field: Field, point: Point, L: Degree) -> DualElement:
    """The dual vector of evaluation at the point: the coefficient of the
    divided-power monomial x^(J) is the value of the ring monomial with
    exponent J at the point."""
    coords = _flat_coords(point)
    monos = space.monomials(L)
    if not monos:
        raise ValueError("L must be effective")
    powers = _power_table(field, coords, max(deg_total(L), 1))
    terms = []
    for e in monos:
        c = field.one
        for v, ev in enumerate(e):
            if ev:
                c = field.mul(c, powers[v][ev])
        if c != 0:
            terms.append((e, c))
    return DualElement(space, field, tuple(L), tuple(terms))


def _condition_rows(space: Space, field: Field, point: Point, D: Degree):
    """Rows of vanishing conditions at the point, one per Hasse-derivative
    multi-index of order < multiplicity; entry at monomial e for derivative
    beta is prod binom(e_v, beta_v) * point^(e - beta)."""
    coords = _flat_coords(point)
    monos = space.monomials(D)
    powers = _power_table(field, coords, max(deg_total(D), 1))
    rows = []
    m = space.nvars
    zero = field.zero
    for order in range(point.multiplicity):
        for beta in _compositions(m, order):
            row = []
            for e in monos:
                c = field.one
                ok = True
                for v in range(m):
                    if beta[v] > e[v]:
                        ok = False
                        break
                    if beta[v]:
                        c = field.mul(c, field.convert(math.comb(e[v], beta[v])))
                    rest = e[v] - beta[v]
                    if rest:
                        c = field.mul(c, powers[v][rest])
                row.append(c if ok else zero)
            rows.append(row)
    return rows


def _condition_matrix(Z: PointConfiguration, D: Degree):
    space, field = Z.space, Z.field
    if (field.prime is not None and not Z.is_simple()
            and field.prime <= deg_total(D)):
        raise SmallCharacteristicError(
            f"fat points over p={field.prime} need p > total degree {deg_total(D)}")
    rows = []
    for p in Z.points:
        rows.extend(_condition_rows(space, field, p, D))
    return rows


def ideal_degree_piece(Z: PointConfiguration, D: Degree) -> DegreewiseSubspace:
    """The degree-D piece of the ideal of Z: sections vanishing at every
    point to its multiplicity, as the kernel of the condition matrix."""
    ncols = Z.space.dim_degree(D)
    rows = _condition_matrix(Z, D)
    return DegreewiseSubspace(tuple(D),
                              Subspace(Z.field, ncols, kernel(rows, ncols, Z.field)))


def hilbert_function_points(Z: PointConfiguration, D: Degree) -> int:
    """Hilbert function of Z at D; the rank of the vanishing conditions."""
    return rank(_condition_matrix(Z, D), Z.field)


# ---------------------------------------------------------------------------
# Randomized verification of generic behaviour

def _map_trials(fn, trials: int, threads: int):
    if threads <= 1:
        return [fn(t) for t in range(trials)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(trials)))


def check_generic_hf(space: Space, r: int, window: Window, trials: int,
                     seed: int, field: Field | None = None,
                     threads: int = 1) -> dict:
    """Sample random simple configurations of r points and test that every
    window degree attains the generic Hilbert function min(r, dim S_D).

    Returns a JSON-ready report; identical for a fixed seed regardless of
    thread count (each trial draws from its own counter-derived stream).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    field = field if field is not None else Field(DEFAULT_PRIME)
    base = CounterRng(seed, 0)

    def trial(t: int):
        rng = base.spawn(t)
        Z = random_configuration(space, field, r, rng)
        bad = []
        for D in window:
            expected = space.generic_hf(r, D)
            got = hilbert_function_points(Z, D)
            if got != expected:
                bad.append({"degree": list(D), "expected": expected, "got": got})
        return bad

    failures = []
    results = _map_trials(trial, trials, threads)
    for t, bad in enumerate(results):
        if bad:
            failures.append({"trial": t, "degrees": bad})
    passed = trials - len(failures)
    return {
        "schema": "multiapolar.generic_hf/1",
        "space": space.to_json(),
        "field": str(field),
        "r": r,
        "window": window.to_json(),
        "trials": trials,
        "seed": seed,
        "passed": passed,
        "pass_fraction": passed / trials if trials else 1.0,
        "failures": failures,
    }


def check_add_point(Z: PointConfiguration, p: Point, window: Window) -> bool:
    """Verify the one-more-general-point recursion
    h_{Z + p}(D) = min(h_Z(D) + 1, dim S_D) for every window degree."""
    normalized = PointConfiguration.make(Z.space, Z.field, [p])
    if normalized.points[0].blocks in set(Z.support()):
        raise ValueError("p already lies in the support of Z")
    bigger = PointConfiguration(Z.space, Z.field, Z.points + normalized.points)
    for D in window:
        expected = min(hilbert_function_points(Z, D) + 1, Z.space.dim_degree(D))
        if hilbert_function_points(bigger, D) != expected:
            return False
    return True


def check_nested_inequality(sub: PointConfiguration, sup: PointConfiguration,
                            window: Window) -> bool:
    """Verify h_sup(D) <= h_sub(D) + (deg sup - deg sub) on the window;
    the nested-subscheme bound for configurations."""
    if not sub.is_subconfiguration_of(sup):
        raise ValueError("sub is not a subconfiguration of sup")
    slack = sup.degree() - sub.degree()
    for D in window:
        if hilbert_function_points(sup, D) > hilbert_function_points(sub, D) + slack:
            return False
    return True


def nested_bound_report(sub: PointConfiguration, r_total: int, D: Degree) -> dict:
    """Upper bound on the Hilbert function of any degree-r_total scheme
    containing sub, compared against the generic value min(r_total, dim S_D)."""
    h_sub = hilbert_function_points(sub, D)
    bound = h_sub + (r_total - sub.degree())
    generic = sub.space.generic_hf(r_total, D)
    return {
        "schema": "multiapolar.nested_bound/1",
        "space": sub.space.to_json(),
        "field": str(sub.field),
        "degree": list(D),
        "sub_degree": sub.degree(),
        "total_degree": r_total,
        "h_sub": h_sub,
        "bound": bound,
        "generic": generic,
        "below_generic": bound < generic,
    }
