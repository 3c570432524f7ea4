"""Multihomogeneous monomial ideals by minimal generators.

Membership is decided by divisibility against the generators, so degreewise
pieces, Hilbert functions, colon ideals and saturation all reduce to exponent
arithmetic.  Saturation with respect to the irrelevant ideal uses the
identity  I : (g_1, ..., g_s)^inf  =  intersection of the I : g_j^inf  over
the squarefree generators g_j of the irrelevant ideal, and each single
saturation I : g^inf just strips the variables of g from every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .ring import (
    Degree,
    Exponent,
    Space,
    exp_divides,
    exp_lcm,
    exp_strip,
    monomial_sort_key,
)


def _minimalize(gens) -> tuple[Exponent, ...]:
    """Canonical minimal generating set: drop anything another generator divides."""
    unique = sorted(set(gens), key=monomial_sort_key)
    out = []
    for u in unique:
        if not any(exp_divides(v, u) for v in out):
            out.append(u)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal; ``gens`` is canonicalized on construction."""

    space: Space
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        m = self.space.nvars
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        for g in gens:
            if len(g) != m or any(x < 0 for x in g):
                raise ValueError(f"bad exponent {g}")
        object.__setattr__(self, "gens", _minimalize(gens))

    @classmethod
    def zero(cls, space: Space) -> "MonomialIdeal":
        return cls(space, ())

    @classmethod
    def unit(cls, space: Space) -> "MonomialIdeal":
        return cls(space, ((0,) * space.nvars,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.space.nvars,)

    # -- membership and degreewise pieces -----------------------------------

    def contains(self, u: Exponent) -> bool:
        return any(exp_divides(g, u) for g in self.gens)

    def piece(self, D: Degree) -> tuple[Exponent, ...]:
        """Monomials of the ideal in degree D, in canonical order."""
        return tuple(u for u in self.space.monomials(D) if self.contains(u))

    def hilbert_function(self, D: Degree) -> int:
        """Colength of the degree-D piece: dim S_D minus monomials in the ideal."""
        return self.space.dim_degree(D) - len(self.piece(D))

    # -- colon and saturation -------------------------------------------------

    def colon_variable_power(self, g: Exponent) -> "MonomialIdeal":
        """The stabilized colon I : g^inf for a squarefree monomial g."""
        g = tuple(int(x) for x in g)
        if all(x == 0 for x in g):
            raise ValueError("g must be a nonconstant monomial")
        if any(x not in (0, 1) for x in g):
            raise ValueError("g must be squarefree")
        stripped = [tuple(0 if gv else uv for uv, gv in zip(u, g)) for u in self.gens]
        return MonomialIdeal(self.space, tuple(stripped))

    def saturate(self) -> "MonomialIdeal":
        """Saturation with respect to the irrelevant ideal of the space."""
        parts = [self.colon_variable_power(g)
                 for g in self.space.irrelevant_generators()]
        return reduce(intersect_ideals, parts)

    def is_saturated(self) -> bool:
        return self.saturate() == self

    # -- text and JSON ----------------------------------------------------------

    def to_text(self) -> str:
        return "\n".join(self.space.format_exponent(g) for g in self.gens)

    @classmethod
    def from_text(cls, space: Space, text: str) -> "MonomialIdeal":
        gens = [space.parse_exponent(line)
                for line in text.splitlines() if line.strip()]
        return cls(space, tuple(gens))

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, space: Space, data: dict) -> "MonomialIdeal":
        return cls(space, tuple(tuple(g) for g in data["generators"]))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.space.format_exponent(g) for g in self.gens) + ")"


def intersect_ideals(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of generators."""
    if I.space != J.space:
        raise ValueError("space mismatch")
    return MonomialIdeal(I.space,
                         tuple(exp_lcm(u, v) for u in I.gens for v in J.gens))


def colon_monomial(I: MonomialIdeal, h: Exponent) -> MonomialIdeal:
    """Single colon I : (h) for a monomial h (used as a stabilization oracle)."""
    return MonomialIdeal(I.space, tuple(exp_strip(u, h) for u in I.gens))


def irrelevant_ideal(space: Space) -> MonomialIdeal:
    """The radical monomial ideal generated by one variable per factor,
    over all choices of slots; for a single projective space this is the
    maximal ideal (x_0, ..., x_n)."""
    return MonomialIdeal(space, space.irrelevant_generators())
