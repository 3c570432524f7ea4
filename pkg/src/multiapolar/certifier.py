"""Border-rank lower bounds by exhaustive search over monomial ideal flags.

A truncated ideal flag assigns to each degree of a window a set of monomials,
closed under multiplication by variables inside the window.  For a target
dual subspace E spanned by monomials (hence fixed by the torus) and a rank
candidate r, the search asks for a flag with

  * every piece contained in the annihilator of E, and
  * every piece of size dim S_D - min(r, dim S_D), the complement of the
    generic Hilbert function of r points.

If such a flag exists for every honest witness ideal it exists here (a
torus-fixed witness may be taken monomial, and truncation to the window only
discards constraints), so an exhaustive NONEXISTENT verdict is a sound proof
that E is outside the r-th (Grassmann) secant variety: border rank >= r + 1.

A CANDIDATE verdict is only the failure to refute: the necessary condition
for rank r passes.  It is never a membership proof.

The depth-first search walks window degrees in canonical order.  At each
degree the monomials forced by closure of earlier pieces are mandatory;
branches choose the remaining monomials among the admissible ones (those in
the annihilator) in canonical order, so the first candidate found is the
DFS-least one and the whole run is deterministic, including the node count
and the hash of the visited trace.
"""

from __future__ import annotations

import hashlib
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .apolar import (
    DualSubspace,
    annihilator_monomial_span,
    containment_in_annihilator,
)
from .ring import (
    Degree,
    Exponent,
    Space,
    Window,
    deg_sub,
    exp_bump,
    is_effective,
)

VERDICT_CANDIDATE = "CANDIDATE"
VERDICT_NONEXISTENT = "NONEXISTENT"
VERDICT_UNDECIDED = "UNDECIDED"


class NonMonomialTargetError(ValueError):
    """The certifier only accepts torus-fixed targets, i.e. subspaces spanned
    by monomials; anything else would make the monomial-only search unsound."""


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class TruncatedIdealFlag:
    """Monomial sets per window degree, the search's notion of an ideal."""

    space: Space
    window: Window
    pieces: tuple[tuple[Degree, tuple[Exponent, ...]], ...]

    @classmethod
    def make(cls, space: Space, window: Window, mapping) -> "TruncatedIdealFlag":
        pieces = []
        for D in window:
            monos = sorted(set(mapping.get(D, ())), reverse=True)
            pieces.append((D, tuple(monos)))
        return cls(space, window, tuple(pieces))

    def piece(self, D: Degree) -> tuple[Exponent, ...]:
        for deg, monos in self.pieces:
            if deg == tuple(D):
                return monos
        raise KeyError(f"degree {D} not in window")

    def piece_sets(self) -> dict[Degree, frozenset]:
        return {deg: frozenset(monos) for deg, monos in self.pieces}

    def is_closed(self) -> bool:
        """Multiplicative closure inside the window."""
        sets = self.piece_sets()
        space = self.space
        for D, monos in self.pieces:
            for v in range(space.nvars):
                up = tuple(d + u for d, u in zip(D, space.unit_degree(space.var_block(v))))
                if up in sets:
                    target = sets[up]
                    for u in monos:
                        if exp_bump(u, v) not in target:
                            return False
        return True

    def to_json(self) -> dict:
        return {"pieces": [{"degree": list(D), "monomials": [list(u) for u in monos]}
                           for D, monos in self.pieces]}


@dataclass(frozen=True)
class Certificate:
    space: Space
    target: tuple[Exponent, ...]
    r: int
    window: Window
    verdict: str
    flag: TruncatedIdealFlag | None
    nodes_explored: int
    trace_hash: str

    def to_json(self) -> dict:
        sizes = None
        if self.flag is not None:
            sizes = [{"degree": list(D), "size": len(monos)}
                     for D, monos in self.flag.pieces]
        else:
            sizes = [{"degree": list(D),
                      "size": required_size(self.space, self.r, D)}
                     for D in self.window]
        return {
            "schema": "multiapolar.certificate/1",
            "space": self.space.to_json(),
            "target": [list(e) for e in self.target],
            "dim_target": len(self.target),
            "r": self.r,
            "window": self.window.to_json(),
            "verdict": self.verdict,
            "nodes_explored": self.nodes_explored,
            "trace_hash": self.trace_hash,
            "piece_sizes": sizes,
            "flag": self.flag.to_json() if self.flag is not None else None,
        }


def required_size(space: Space, r: int, D: Degree) -> int:
    """Piece size forced by the generic Hilbert function: the ideal must have
    codimension min(r, dim S_D) in degree D."""
    dim = space.dim_degree(D)
    return dim - min(r, dim)


def _admissible_sets(space: Space, E: DualSubspace, window: Window):
    """Monomials of the annihilator of E per window degree, canonical order."""
    ann = annihilator_monomial_span(E)
    return {D: ann.piece(D) for D in window}


def _check_target_and_window(E: DualSubspace, window: Window | None) -> Window:
    if not E.is_monomial:
        raise NonMonomialTargetError(
            "certifier requires a monomial-spanned (torus-fixed) target")
    if window is None:
        window = Window.box(E.degree)
    elif not window.includes_box(E.degree):
        raise ValueError("window must contain every degree below the target degree")
    return window


def _forced_piece(space: Space, chosen: dict, D: Degree) -> set:
    forced = set()
    for v in range(space.nvars):
        below = deg_sub(D, space.unit_degree(space.var_block(v)))
        if is_effective(below) and below in chosen:
            for u in chosen[below]:
                forced.add(exp_bump(u, v))
    return forced


def _trace_update(tracer, D: Degree, piece) -> None:
    desc = ",".join(str(d) for d in D) + "|" + ";".join(
        ".".join(str(x) for x in u) for u in sorted(piece, reverse=True))
    tracer.update(desc.encode())
    tracer.update(b"&")


def certify(E: DualSubspace, r: int, window: Window | None = None,
            max_nodes: int | None = None) -> Certificate:
    """Search for a truncated monomial ideal flag witnessing the necessary
    condition for rank r.  Returns a NONEXISTENT certificate after exhausting
    the search tree, the DFS-least CANDIDATE flag otherwise, or UNDECIDED if
    the node budget runs out before a verdict."""
    if r < 1:
        raise ValueError("r must be >= 1")
    window = _check_target_and_window(E, window)
    space = E.space
    targets = tuple(sorted(E.monomial_exponents(), reverse=True))
    degrees = list(window)
    required = {D: required_size(space, r, D) for D in degrees}
    admissible = _admissible_sets(space, E, window)

    tracer = hashlib.sha256()
    nodes = 0
    chosen: dict[Degree, frozenset] = {}

    def search(i: int):
        nonlocal nodes
        D = degrees[i]
        forced = _forced_piece(space, chosen, D)
        req = required[D]
        if len(forced) > req:
            return None
        adm = admissible[D]
        if not forced <= set(adm):
            return None
        pool = [u for u in adm if u not in forced]
        need = req - len(forced)
        if need > len(pool):
            return None
        for combo in itertools.combinations(pool, need):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExhausted
            piece = frozenset(forced) | set(combo)
            _trace_update(tracer, D, piece)
            chosen[D] = piece
            if i + 1 == len(degrees):
                return dict(chosen)
            found = search(i + 1)
            if found is not None:
                return found
        chosen.pop(D, None)
        return None

    try:
        result = search(0)
    except BudgetExhausted:
        return Certificate(space, targets, r, window, VERDICT_UNDECIDED,
                           None, nodes, tracer.hexdigest())

    if result is None:
        return Certificate(space, targets, r, window, VERDICT_NONEXISTENT,
                           None, nodes, tracer.hexdigest())
    flag = TruncatedIdealFlag.make(space, window, result)
    if not validate_candidate(flag, E, r):
        raise RuntimeError("internal error: emitted candidate failed revalidation")
    return Certificate(space, targets, r, window, VERDICT_CANDIDATE,
                       flag, nodes, tracer.hexdigest())


def validate_candidate(flag: TruncatedIdealFlag, E: DualSubspace, r: int) -> bool:
    """Independent revalidation of a flag: piece sizes, multiplicative
    closure, combinatorial containment in the annihilator at every window
    degree, and the top-degree containment checked by exact linear algebra."""
    if not E.is_monomial:
        raise NonMonomialTargetError(
            "certifier requires a monomial-spanned (torus-fixed) target")
    space, window = flag.space, flag.window
    targets = E.monomial_exponents()
    for D, monos in flag.pieces:
        if len(monos) != required_size(space, r, D):
            return False
        for u in monos:
            if space.degree_of_exponent(u) != D:
                return False
            if any(exp_divides_leq(u, a) for a in targets):
                return False
    if not flag.is_closed():
        return False
    if tuple(E.degree) in window and not containment_in_annihilator(flag, E):
        return False
    return True


def exp_divides_leq(u: Exponent, a: Exponent) -> bool:
    """u outside the annihilator of x^(a) means u <= a componentwise."""
    return all(x <= y for x, y in zip(u, a))


def brute_force_certify(E: DualSubspace, r: int,
                        window: Window | None = None) -> str:
    """Unpruned oracle: enumerate every assignment of size-exact monomial
    pieces over the window (all subsets, not just admissible ones) and test
    each complete flag.  Returns the verdict string; agrees with certify()."""
    window = _check_target_and_window(E, window)
    space = E.space
    targets = tuple(sorted(E.monomial_exponents(), reverse=True))
    degrees = list(window)
    per_degree = [itertools.combinations(space.monomials(D),
                                         required_size(space, r, D))
                  for D in degrees]
    for assignment in itertools.product(*per_degree):
        pieces = {D: frozenset(monos) for D, monos in zip(degrees, assignment)}
        if _pieces_valid(space, degrees, pieces, targets):
            return VERDICT_CANDIDATE
    return VERDICT_NONEXISTENT


def _pieces_valid(space: Space, degrees, pieces, targets) -> bool:
    for D in degrees:
        monos = pieces[D]
        for u in monos:
            if any(exp_divides_leq(u, a) for a in targets):
                return False
        forced = _forced_piece(space, pieces, D)
        if not forced <= monos:
            return False
    return True


def lower_bound_scan(E: DualSubspace, r_max: int, window: Window | None = None,
                     max_nodes: int | None = None, threads: int = 1) -> dict:
    """Certificates for r = 1..r_max; the reported lower bound is one more
    than the largest refuted r.  Rows are independent (no monotonicity in r
    is assumed) and may be computed in parallel."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    window = _check_target_and_window(E, window)

    def row(r: int) -> Certificate:
        return certify(E, r, window, max_nodes)

    if threads <= 1:
        certs = [row(r) for r in range(1, r_max + 1)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(row, range(1, r_max + 1)))

    refuted = [c.r for c in certs if c.verdict == VERDICT_NONEXISTENT]
    undecided = [c.r for c in certs if c.verdict == VERDICT_UNDECIDED]
    return {
        "schema": "multiapolar.scan/1",
        "space": E.space.to_json(),
        "target": [list(e) for e in sorted(E.monomial_exponents(), reverse=True)],
        "dim_target": E.dim,
        "r_max": r_max,
        "window": window.to_json(),
        "rows": [{"r": c.r, "verdict": c.verdict,
                  "nodes_explored": c.nodes_explored,
                  "trace_hash": c.trace_hash} for c in certs],
        "lower_bound": 1 + max(refuted, default=0),
        "undecided": undecided,
    }
