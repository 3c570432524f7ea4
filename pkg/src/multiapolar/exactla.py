"""Exact linear algebra over the rationals and over prime fields.

Matrices are lists of rows; entries are ``fractions.Fraction`` over Q and
plain ints in [0, p) over F_p.  No floating point anywhere.  The canonical
representative of a row space is its reduced row echelon form, so equal
subspaces compare equal as tuples.

Perps are taken with respect to the standard coordinate pairing; over any
field this pairing is nondegenerate, so dim W^perp = n - dim W and
W^perp^perp = W, which is all the intersection routine needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = (1 << 31) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (prime=None) or the prime field F_p."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def zero(self):
        return 0 if self.prime is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.prime is not None else Fraction(1)

    def convert(self, x):
        """Coerce an int or Fraction into the field."""
        if self.prime is None:
            return Fraction(x)
        p = self.prime
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return x.numerator % p * pow(den, -1, p) % p
        return x % p

    def add(self, a, b):
        return (a + b) % self.prime if self.prime is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.prime if self.prime is not None else a - b

    def mul(self, a, b):
        return a * b % self.prime if self.prime is not None else a * b

    def neg(self, a):
        return -a % self.prime if self.prime is not None else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.prime) if self.prime is not None else 1 / a

    def power(self, a, n: int):
        if self.prime is not None:
            return pow(a, n, self.prime)
        return a ** n

    def format(self, a) -> str:
        return str(a)

    def parse_scalar(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return self.convert(Fraction(int(num), int(den)))
        return self.convert(int(text))

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip()
        if t in ("Q", "q", "QQ", "0"):
            return cls()
        if t.lower().startswith("p="):
            return cls(int(t[2:]))
        raise ValueError(f"cannot parse field {text!r} (expected 'Q' or 'p=PRIME')")

    def __str__(self) -> str:
        return "Q" if self.prime is None else f"p={self.prime}"


RATIONALS = Field()


# ---------------------------------------------------------------------------
# Row reduction

def _rref_mod(m: list[list[int]], p: int):
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    for i in range(nrows):
        m[i] = [x % p for x in m[i]]
    piv = 0
    pivots = []
    for col in range(ncols):
        pr = next((r for r in range(piv, nrows) if m[r][col]), None)
        if pr is None:
            continue
        m[piv], m[pr] = m[pr], m[piv]
        row = m[piv]
        if row[col] != 1:
            inv = pow(row[col], -1, p)
            m[piv] = row = [x * inv % p for x in row]
        for r in range(nrows):
            f = m[r][col]
            if r != piv and f:
                other = m[r]
                m[r] = [(a - f * b) % p for a, b in zip(other, row)]
        pivots.append(col)
        piv += 1
        if piv == nrows:
            break
    return tuple(tuple(r) for r in m[:piv]), tuple(pivots)


def _rref_frac(m: list[list[Fraction]]):
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    for i in range(nrows):
        m[i] = [Fraction(x) for x in m[i]]
    piv = 0
    pivots = []
    for col in range(ncols):
        pr = next((r for r in range(piv, nrows) if m[r][col]), None)
        if pr is None:
            continue
        m[piv], m[pr] = m[pr], m[piv]
        row = m[piv]
        if row[col] != 1:
            inv = 1 / row[col]
            m[piv] = row = [x * inv for x in row]
        for r in range(nrows):
            f = m[r][col]
            if r != piv and f:
                other = m[r]
                m[r] = [a - f * b for a, b in zip(other, row)]
        pivots.append(col)
        piv += 1
        if piv == nrows:
            break
    return tuple(tuple(r) for r in m[:piv]), tuple(pivots)


def rref(rows, field: Field):
    """Reduced row echelon form; returns (rows without zero rows, pivot cols)."""
    m = [list(r) for r in rows]
    if field.prime is not None:
        return _rref_mod(m, field.prime)
    return _rref_frac(m)


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[0])


def kernel(rows, ncols: int, field: Field):
    """Canonical basis of {v : M v = 0} for the matrix M with given rows."""
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(red[i][free])
        basis.append(v)
    return rref(basis, field)[0]


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient, stored by its canonical RREF basis."""

    field: Field
    ambient: int
    rows: tuple[tuple, ...]

    @classmethod
    def span(cls, field: Field, ambient: int, rows) -> "Subspace":
        converted = [[field.convert(x) for x in r] for r in rows]
        for r in converted:
            if len(r) != ambient:
                raise ValueError("row length does not match ambient dimension")
        return cls(field, ambient, rref(converted, field)[0])

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        eye = [[field.one if i == j else field.zero for j in range(ambient)]
               for i in range(ambient)]
        return cls(field, ambient, tuple(tuple(r) for r in eye))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def _pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x != 0) for row in self.rows]

    def contains(self, vec) -> bool:
        if len(vec) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        f = self.field
        v = [f.convert(x) for x in vec]
        for row, pc in zip(self.rows, self._pivots()):
            c = v[pc]
            if c != 0:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def perp(self) -> "Subspace":
        return Subspace(self.field, self.ambient,
                        kernel(self.rows, self.ambient, self.field))

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return self.perp().add(other.perp()).perp()

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(other.contains(r) for r in self.rows)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def basis_json(self) -> list[list[str]]:
        return [[self.field.format(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class DegreewiseSubspace:
    """A Subspace tagged with the multidegree whose monomial basis indexes it."""

    degree: tuple[int, ...]
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def codim(self) -> int:
        return self.space.codim

    def contains(self, vec) -> bool:
        return self.space.contains(vec)

    def intersect(self, other: "DegreewiseSubspace") -> "DegreewiseSubspace":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return DegreewiseSubspace(self.degree, self.space.intersect(other.space))
