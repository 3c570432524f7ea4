"""The contraction action, catalecticant matrices, and annihilators.

The graded dual of the coordinate ring is written in the divided-power
monomial basis.  Contraction by a ring monomial is plain exponent
subtraction:

    theta^I . x^(J)  =  x^(J - I)   if J - I stays in N^m, else 0,

with no multinomial coefficients, which is what makes every computation
here valid in all characteristics.  The annihilator of a dual subspace E
is computed degreewise as the joint kernel of the catalecticant matrices
of a basis of E; when E is spanned by monomials the annihilator is itself
a monomial ideal with the closed-form generators {v^(a_v + 1)}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import DegreewiseSubspace, Field, Subspace, kernel
from .monideal import MonomialIdeal, intersect_ideals
from .ring import (
    Degree,
    Exponent,
    Space,
    deg_sub,
    exp_mul,
    exp_sub,
    is_effective,
)


@dataclass(frozen=True)
class DualElement:
    """A homogeneous element of the graded dual, as a sparse sum of
    divided-power monomials with exact coefficients.

    ``terms`` maps exponents (all of multidegree ``degree``) to nonzero
    scalars; an empty term list represents zero, which contraction is
    allowed to return.
    """

    space: Space
    field: Field
    degree: Degree
    terms: tuple[tuple[Exponent, object], ...]

    def __post_init__(self):
        f = self.field
        combined: dict[Exponent, object] = {}
        for e, c in self.terms:
            e = tuple(int(x) for x in e)
            combined[e] = f.add(combined.get(e, f.zero), f.convert(c))
        cleaned = []
        for e in self.space.monomials(self.degree):
            c = combined.pop(e, f.zero)
            if c != 0:
                cleaned.append((e, c))
        if any(c != 0 for c in combined.values()):
            raise ValueError(f"terms not homogeneous of degree {self.degree}")
        object.__setattr__(self, "terms", tuple(cleaned))

    @classmethod
    def monomial(cls, space: Space, field: Field, e: Exponent) -> "DualElement":
        return cls(space, field, space.degree_of_exponent(e), ((e, field.one),))

    @classmethod
    def zero(cls, space: Space, field: Field, degree: Degree) -> "DualElement":
        return cls(space, field, degree, ())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, e: Exponent):
        for exp, c in self.terms:
            if exp == e:
                return c
        return self.field.zero

    def coefficient_vector(self) -> tuple:
        lookup = dict(self.terms)
        return tuple(lookup.get(e, self.field.zero)
                     for e in self.space.monomials(self.degree))

    def scale(self, c) -> "DualElement":
        c = self.field.convert(c)
        return DualElement(self.space, self.field, self.degree,
                           tuple((e, self.field.mul(c, x)) for e, x in self.terms))

    def __add__(self, other: "DualElement") -> "DualElement":
        if (self.space, self.field, self.degree) != (other.space, other.field, other.degree):
            raise ValueError("cannot add dual elements of different degrees")
        return DualElement(self.space, self.field, self.degree,
                           self.terms + other.terms)

    def to_json(self) -> dict:
        terms = []
        for e, c in self.terms:
            num, den = (c.numerator, c.denominator) if self.field.prime is None else (c, 1)
            terms.append({"exp": list(e), "num": int(num), "den": int(den)})
        return {"L": list(self.degree), "terms": terms}

    @classmethod
    def from_json(cls, space: Space, field: Field, data: dict) -> "DualElement":
        from fractions import Fraction
        terms = [(tuple(t["exp"]), Fraction(t["num"], t.get("den", 1)))
                 for t in data["terms"]]
        return cls(space, field, tuple(data["L"]), tuple(terms))

    @classmethod
    def parse(cls, space: Space, field: Field, text: str) -> "DualElement":
        """Parse a single divided-power monomial like ``x0^1 x1^1 x2^2``."""
        return cls.monomial(space, field, space.parse_exponent(text))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = self.space.format_exponent(e)
            parts.append(mono if c == self.field.one else f"{self.field.format(c)}*{mono}")
        return " + ".join(parts)


def contract(theta: Exponent, F: DualElement) -> DualElement:
    """Contraction of F by the ring monomial with exponent theta.

    Linear over the terms of F: each divided-power monomial x^(J) maps to
    x^(J - theta) when the difference stays in N^m and drops otherwise.
    The result is homogeneous of degree deg F - deg theta, and is the zero
    element when every term drops (in particular whenever deg theta is not
    below deg F componentwise).
    """
    space = F.space
    theta = tuple(theta)
    if len(theta) != space.nvars:
        raise ValueError("theta has the wrong number of variables")
    target = deg_sub(F.degree, space.degree_of_exponent(theta))
    terms = []
    for e, c in F.terms:
        diff = exp_sub(e, theta)
        if diff is not None:
            terms.append((diff, c))
    return DualElement(space, F.field, target, tuple(terms))


def contract_combination(pairs, F: DualElement) -> DualElement:
    """Contraction by a ring polynomial given as (exponent, coefficient) pairs."""
    out = None
    for theta, c in pairs:
        piece = contract(theta, F).scale(c)
        out = piece if out is None else out + piece
    if out is None:
        raise ValueError("empty combination")
    return out


def catalecticant(F: DualElement, D: Degree) -> list[list]:
    """Matrix of contraction-by-degree-D against F, from the degree-D piece
    of the ring (columns) to the dual piece in degree L - D (rows).

    Bases on both sides are the canonical monomial orders.  When L - D is
    not effective the map is zero and the matrix has no rows.
    """
    space = F.space
    if not is_effective(D):
        raise ValueError("D must be effective")
    cols = space.monomials(D)
    target = deg_sub(F.degree, D)
    if not is_effective(target):
        return []
    lookup = dict(F.terms)
    zero = F.field.zero
    rows = []
    for m in space.monomials(target):
        rows.append([lookup.get(exp_mul(m, e), zero) for e in cols])
    return rows


@dataclass(frozen=True)
class DualSubspace:
    """A subspace of the degree-L dual piece, by a canonical echelon basis."""

    space: Space
    field: Field
    degree: Degree
    basis: tuple[DualElement, ...]

    @classmethod
    def span(cls, elements) -> "DualSubspace":
        elements = list(elements)
        if not elements:
            raise ValueError("need at least one element")
        first = elements[0]
        space, field, L = first.space, first.field, first.degree
        for el in elements:
            if (el.space, el.field, el.degree) != (space, field, L):
                raise ValueError("elements must share space, field, and degree")
        monos = space.monomials(L)
        sub = Subspace.span(field, len(monos),
                            [el.coefficient_vector() for el in elements])
        if sub.dim == 0:
            raise ValueError("span is zero")
        basis = tuple(
            DualElement(space, field, L,
                        tuple((e, c) for e, c in zip(monos, row) if c != 0))
            for row in sub.rows)
        return cls(space, field, L, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_monomial(self) -> bool:
        """True when the canonical basis consists of single monomials, i.e.
        the subspace is spanned by monomials (hence fixed by the torus)."""
        return all(len(F.terms) == 1 for F in self.basis)

    def monomial_exponents(self) -> tuple[Exponent, ...]:
        if not self.is_monomial:
            raise ValueError("subspace is not spanned by monomials")
        return tuple(F.terms[0][0] for F in self.basis)

    def subspace(self) -> Subspace:
        return Subspace.span(self.field, len(self.space.monomials(self.degree)),
                             [F.coefficient_vector() for F in self.basis])

    def to_json(self) -> dict:
        return {"L": list(self.degree),
                "basis": [el.to_json()["terms"] for el in self.basis]}


def annihilator_degree(E: DualSubspace, D: Degree) -> DegreewiseSubspace:
    """The degree-D piece of the annihilator of E: all degree-D ring elements
    contracting every element of E to zero.

    Computed as the joint kernel of the catalecticant matrices of the basis
    of E, which is the intersection of the individual annihilator pieces.
    At D = L this is exactly the orthogonal complement of E.
    """
    if not is_effective(D):
        raise ValueError("D must be effective")
    ncols = E.space.dim_degree(D)
    stacked = []
    for F in E.basis:
        stacked.extend(catalecticant(F, D))
    return DegreewiseSubspace(tuple(D),
                              Subspace(E.field, ncols, kernel(stacked, ncols, E.field)))


def annihilator_monomial(F: DualElement) -> MonomialIdeal:
    """The annihilator of a single divided-power monomial x^(a), as the
    monomial ideal with minimal generators {v^(a_v + 1) : v a variable}."""
    if len(F.terms) != 1:
        raise ValueError("F must be a single monomial")
    a = F.terms[0][0]
    m = F.space.nvars
    gens = []
    for v in range(m):
        e = [0] * m
        e[v] = a[v] + 1
        gens.append(tuple(e))
    return MonomialIdeal(F.space, tuple(gens))


def annihilator_monomial_span(E: DualSubspace) -> MonomialIdeal:
    """Annihilator of a monomial-spanned subspace, as the intersection of the
    annihilators of its basis monomials."""
    ideals = [annihilator_monomial(F) for F in E.basis]
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect_ideals(out, J)
    return out


def containment_in_annihilator(I, E: DualSubspace) -> bool:
    """Whether the degree-L piece of I lies in the annihilator of E at L.

    For a multihomogeneous ideal this certifies full containment
    I in Ann(E): membership propagates from the top degree downward because
    contracting against the whole complementary piece detects nonzero duals.
    ``I`` may be a MonomialIdeal or a truncated ideal flag whose window
    contains L.
    """
    L = E.degree
    monos = I.piece(L)  # MonomialIdeal and TruncatedIdealFlag both expose this
    if not monos:
        return True
    ann = annihilator_degree(E, L)
    basis = E.space.monomials(L)
    index = {e: i for i, e in enumerate(basis)}
    zero, one = E.field.zero, E.field.one
    for u in monos:
        vec = [zero] * len(basis)
        vec[index[u]] = one
        if not ann.contains(vec):
            return False
    return True


def apolarity_check(Z, E: DualSubspace) -> bool:
    """Whether the ideal of the point configuration Z is contained in the
    annihilator of E at degree L, i.e. whether E lies in the span of Z.

    Agrees with direct span membership of each basis element of E in the
    row space of the evaluation duals of Z.
    """
    from . import points  # local import; points builds on this module

    piece = points.ideal_degree_piece(Z, E.degree)
    ann = annihilator_degree(E, E.degree)
    return piece.space.is_subspace_of(ann.space)
