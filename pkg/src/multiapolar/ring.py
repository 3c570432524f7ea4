"""Combinatorics of the Z^k-graded coordinate ring of P^{a_1} x ... x P^{a_k}.

The ring has one variable block per factor: variable (i, j) with
0 <= j <= a_i carries the i-th unit vector as its degree.  Monomials are
exponent tuples of length m = sum(a_i + 1), flattened block by block.
Everything here is pure combinatorics: degrees, monomial enumeration,
graded dimensions, and the degree windows used to truncate searches.

Canonical orders, fixed once for the whole library:

* monomials of one degree: lexicographic on the flattened exponent
  vector, largest first (so x0^2 precedes x0*x1 precedes x1^2);
* degrees in a window: total degree first, ties broken lexicographically
  ascending.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache

Degree = tuple[int, ...]
Exponent = tuple[int, ...]


# ---------------------------------------------------------------------------
# Degree vectors (elements of Z^k)

def is_effective(D: Degree) -> bool:
    return all(d >= 0 for d in D)

def deg_sub(D: Degree, E: Degree) -> Degree:
    return tuple(d - e for d, e in zip(D, E))

def deg_total(D: Degree) -> int:
    return sum(D)

def degree_sort_key(D: Degree) -> tuple:
    return (sum(D), D)

def format_degree(D: Degree) -> str:
    return ",".join(str(d) for d in D)

def parse_degree(text: str, k: int) -> Degree:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != k:
        raise ValueError(f"degree {text!r} has {len(parts)} entries, expected {k}")
    return tuple(int(p) for p in parts)


# ---------------------------------------------------------------------------
# Exponent vectors (monomials, elements of N^m)

def exp_divides(u: Exponent, v: Exponent) -> bool:
    return all(a <= b for a, b in zip(u, v))

def exp_mul(u: Exponent, v: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(u, v))

def exp_lcm(u: Exponent, v: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(u, v))

def exp_sub(u: Exponent, v: Exponent) -> Exponent | None:
    """Componentwise difference, or None if it leaves N^m."""
    out = []
    for a, b in zip(u, v):
        c = a - b
        if c < 0:
            return None
        out.append(c)
    return tuple(out)

def exp_strip(u: Exponent, v: Exponent) -> Exponent:
    """Saturating difference max(u - v, 0)."""
    return tuple(max(a - b, 0) for a, b in zip(u, v))

def exp_bump(u: Exponent, var: int) -> Exponent:
    return u[:var] + (u[var] + 1,) + u[var + 1:]

def monomial_sort_key(u: Exponent) -> tuple:
    """Global order: total degree, then descending flattened lex."""
    return (sum(u), tuple(-a for a in u))


@lru_cache(maxsize=None)
def _compositions(slots: int, total: int) -> tuple[tuple[int, ...], ...]:
    # descending lexicographic
    if slots == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(slots - 1, total - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomials(factors: tuple[int, ...], degree: Degree) -> tuple[Exponent, ...]:
    if not is_effective(degree):
        return ()
    blocks = [_compositions(a + 1, d) for a, d in zip(factors, degree)]
    return tuple(sum(parts, ()) for parts in itertools.product(*blocks))


# ---------------------------------------------------------------------------

_SPACE_RE = re.compile(r"^p\d+(?:xp\d+)*$")
_VAR_RE = re.compile(r"^x(\d+)(?:,(\d+))?(?:\^(\d+))?$")


@dataclass(frozen=True)
class Space:
    """A product of projective spaces P^{a_1} x ... x P^{a_k}.

    ``factors`` lists the dimensions (a_1, ..., a_k); the grading group is
    Z^k and the ring has sum(a_i + 1) variables.
    """

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(a) for a in self.factors))
        if len(self.factors) < 1:
            raise ValueError("need at least one factor")
        if any(a < 1 for a in self.factors):
            raise ValueError("every factor dimension must be >= 1")

    # -- shape ------------------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def nvars(self) -> int:
        return sum(a + 1 for a in self.factors)

    @property
    def dim(self) -> int:
        return sum(self.factors)

    def block_offsets(self) -> tuple[int, ...]:
        offs = [0]
        for a in self.factors:
            offs.append(offs[-1] + a + 1)
        return tuple(offs)

    def var_block(self, var: int) -> int:
        """Factor index owning the flattened variable index."""
        offs = self.block_offsets()
        for i in range(self.k):
            if var < offs[i + 1]:
                return i
        raise IndexError(var)

    def var_slot(self, var: int) -> tuple[int, int]:
        i = self.var_block(var)
        return i, var - self.block_offsets()[i]

    def var_index(self, block: int, slot: int) -> int:
        if not (0 <= block < self.k and 0 <= slot <= self.factors[block]):
            raise ValueError(f"no variable ({block},{slot}) on {self}")
        return self.block_offsets()[block] + slot

    def zero_degree(self) -> Degree:
        return (0,) * self.k

    def unit_degree(self, block: int) -> Degree:
        return tuple(1 if i == block else 0 for i in range(self.k))

    def degree_of_exponent(self, e: Exponent) -> Degree:
        offs = self.block_offsets()
        return tuple(sum(e[offs[i]:offs[i + 1]]) for i in range(self.k))

    # -- graded pieces ------------------------------------------------------

    def dim_degree(self, D: Degree) -> int:
        """dim of the degree-D graded piece; 0 for non-effective D."""
        if len(D) != self.k:
            raise ValueError("degree length mismatch")
        if not is_effective(D):
            return 0
        return math.prod(math.comb(a + d, a) for a, d in zip(self.factors, D))

    def monomials(self, D: Degree) -> tuple[Exponent, ...]:
        """All exponents of multidegree D, in the canonical order."""
        if len(D) != self.k:
            raise ValueError("degree length mismatch")
        return _monomials(self.factors, tuple(D))

    def generic_hf(self, r: int, D: Degree) -> int:
        """Hilbert function of r general points: min(r, dim of the piece)."""
        if r < 0:
            raise ValueError("r must be >= 0")
        return min(r, self.dim_degree(D))

    def irrelevant_generators(self) -> tuple[Exponent, ...]:
        """Exponents of the products of one variable per factor."""
        gens = []
        offs = self.block_offsets()
        for slots in itertools.product(*(range(a + 1) for a in self.factors)):
            e = [0] * self.nvars
            for i, j in enumerate(slots):
                e[offs[i] + j] = 1
            gens.append(tuple(e))
        return tuple(sorted(gens, key=monomial_sort_key))

    # -- text and JSON -------------------------------------------------------

    def variable_name(self, var: int) -> str:
        if self.k == 1:
            return f"x{var}"
        i, j = self.var_slot(var)
        return f"x{i},{j}"

    def format_exponent(self, e: Exponent) -> str:
        parts = [f"{self.variable_name(v)}^{e[v]}" for v in range(self.nvars) if e[v]]
        return " ".join(parts) if parts else "1"

    def parse_exponent(self, text: str) -> Exponent:
        """Parse ``x0^2 x1^1`` (flat index) or ``x0,1^2`` (factor,slot)."""
        e = [0] * self.nvars
        tokens = text.replace("*", " ").split()
        if not tokens:
            raise ValueError("empty monomial")
        for tok in tokens:
            if tok == "1":
                continue
            m = _VAR_RE.match(tok)
            if m is None:
                raise ValueError(f"bad monomial factor {tok!r}")
            a, b, p = m.groups()
            var = self.var_index(int(a), int(b)) if b is not None else int(a)
            if not (0 <= var < self.nvars):
                raise ValueError(f"variable index out of range in {tok!r}")
            e[var] += int(p) if p is not None else 1
        return tuple(e)

    @classmethod
    def parse(cls, text: str) -> "Space":
        t = text.strip().lower()
        if not _SPACE_RE.match(t):
            raise ValueError(f"cannot parse space {text!r} (expected e.g. 'P2' or 'P1xP1')")
        return cls(tuple(int(p[1:]) for p in t.split("x")))

    def __str__(self) -> str:
        return "x".join(f"P{a}" for a in self.factors)

    def to_json(self) -> dict:
        return {"factors": list(self.factors)}

    @classmethod
    def from_json(cls, data: dict) -> "Space":
        return cls(tuple(data["factors"]))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Window:
    """A finite downward-closed set of effective degrees, canonically ordered.

    Downward closure (under the componentwise order, within the set's
    bounding box) is what makes degree-by-degree processing respect
    divisibility: if u divides v then deg u is listed before deg v.
    """

    k: int
    degrees: tuple[Degree, ...]

    def __post_init__(self):
        degs = tuple(sorted({tuple(int(x) for x in D) for D in self.degrees},
                            key=degree_sort_key))
        object.__setattr__(self, "degrees", degs)
        members = set(degs)
        if (0,) * self.k not in members:
            raise ValueError("window must contain the zero degree")
        for D in degs:
            if len(D) != self.k:
                raise ValueError("degree length mismatch in window")
            if not is_effective(D):
                raise ValueError("window degrees must be effective")
            for i in range(self.k):
                if D[i] > 0:
                    below = D[:i] + (D[i] - 1,) + D[i + 1:]
                    if below not in members:
                        raise ValueError(f"window is not downward closed at {D}")

    @classmethod
    def box(cls, bound: Degree) -> "Window":
        """All effective degrees componentwise <= bound."""
        bound = tuple(int(b) for b in bound)
        if not is_effective(bound):
            raise ValueError("box bound must be effective")
        degs = itertools.product(*(range(b + 1) for b in bound))
        return cls(len(bound), tuple(degs))

    @classmethod
    def total(cls, k: int, t: int) -> "Window":
        """All effective degrees of total degree <= t."""
        if t < 0:
            raise ValueError("total degree bound must be >= 0")
        degs = [D for D in itertools.product(*(range(t + 1) for _ in range(k)))
                if sum(D) <= t]
        return cls(k, tuple(degs))

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, D) -> bool:
        return tuple(D) in set(self.degrees)

    @property
    def max_total(self) -> int:
        return max(sum(D) for D in self.degrees)

    def includes_box(self, bound: Degree) -> bool:
        members = set(self.degrees)
        return all(D in members
                   for D in itertools.product(*(range(b + 1) for b in bound)))

    def to_json(self) -> dict:
        return {"degrees": [list(D) for D in self.degrees]}

    @classmethod
    def from_json(cls, data: dict) -> "Window":
        degs = [tuple(D) for D in data["degrees"]]
        return cls(len(degs[0]), tuple(degs))
