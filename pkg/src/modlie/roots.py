"""Classical root systems (families A, B, C, D) in exact integer coordinates.

Roots are integer vectors in the standard orthonormal basis e1, e2, ...
All arithmetic is exact.  The canonical ordering of roots -- by height
(sum of the coefficients over the base), ties broken lexicographically by
coordinates -- fixes every downstream convention: basis indexing,
structure-constant signs, PBW monomial order, report layouts.  Do not
change it silently.

Realizations:
  A1       {+-e1} in one coordinate (self-paired with the sl2 inside B_l).
  A_l, l>1 {e_i - e_j, i != j} in l+1 coordinates.
  B_l      {+-e_i} u {+-e_i +- e_j, i != j} in l coordinates, l >= 2.
  C_l      {+-2e_i} u {+-e_i +- e_j, i != j} in l coordinates, l >= 2.
  D_l      {+-e_i +- e_j, i != j} in l coordinates, l >= 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

FAMILIES = ("A", "B", "C", "D")


class UnsupportedRank(ValueError):
    """Requested rank is outside the family's supported range."""


class RootNotInSystem(KeyError):
    """A root argument does not belong to the root system at hand."""


@dataclass(frozen=True, order=True)
class Root:
    """Integer coordinate vector in the e-basis; squared length is the dot square."""

    coords: tuple[int, ...]

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coords))

    def __add__(self, other: Root) -> Root:
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: Root) -> Root:
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def dot(self, other: Root) -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords, strict=True))

    @property
    def sq_length(self) -> int:
        return self.dot(self)

    @property
    def label(self) -> str:
        """Signed token form, e.g. ``+e1-e2``, ``-e2``, ``+2e1``."""
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}e{i}")
        return "".join(parts) if parts else "0"

    @property
    def plain_label(self) -> str:
        """Label without a leading ``+`` (used for coroot display)."""
        s = self.label
        return s[1:] if s.startswith("+") else s

    def __repr__(self) -> str:
        return f"Root({self.label})"


def _unit(i: int, dim: int) -> Root:
    c = [0] * dim
    c[i - 1] = 1
    return Root(tuple(c))


def _family_roots(family: str, rank: int) -> tuple[int, list[Root], list[Root]]:
    """Return (ambient dim, all roots, base) for the requested family and rank."""
    if family == "A":
        if rank < 1:
            raise UnsupportedRank("family A needs rank >= 1")
        if rank == 1:
            e1 = _unit(1, 1)
            return 1, [e1, -e1], [e1]
        dim = rank + 1
        roots = [
            _unit(i, dim) - _unit(j, dim)
            for i in range(1, dim + 1)
            for j in range(1, dim + 1)
            if i != j
        ]
        base = [_unit(i, dim) - _unit(i + 1, dim) for i in range(1, rank + 1)]
        return dim, roots, base
    if family == "B":
        if rank < 2:
            raise UnsupportedRank("family B needs rank >= 2")
        dim = rank
        roots = []
        for i in range(1, dim + 1):
            roots += [_unit(i, dim), -_unit(i, dim)]
        for i in range(1, dim + 1):
            for j in range(i + 1, dim + 1):
                for si, sj in itertools.product((1, -1), repeat=2):
                    c = [0] * dim
                    c[i - 1], c[j - 1] = si, sj
                    roots.append(Root(tuple(c)))
        base = [_unit(i, dim) - _unit(i + 1, dim) for i in range(1, rank)] + [_unit(rank, dim)]
        return dim, roots, base
    if family == "C":
        if rank < 2:
            raise UnsupportedRank("family C needs rank >= 2")
        dim = rank
        roots = []
        for i in range(1, dim + 1):
            two = Root(tuple(2 if k == i - 1 else 0 for k in range(dim)))
            roots += [two, -two]
        for i in range(1, dim + 1):
            for j in range(i + 1, dim + 1):
                for si, sj in itertools.product((1, -1), repeat=2):
                    c = [0] * dim
                    c[i - 1], c[j - 1] = si, sj
                    roots.append(Root(tuple(c)))
        base = [_unit(i, dim) - _unit(i + 1, dim) for i in range(1, rank)]
        base.append(Root(tuple(2 if k == rank - 1 else 0 for k in range(dim))))
        return dim, roots, base
    if family == "D":
        if rank < 3:
            raise UnsupportedRank("family D needs rank >= 3")
        dim = rank
        roots = []
        for i in range(1, dim + 1):
            for j in range(i + 1, dim + 1):
                for si, sj in itertools.product((1, -1), repeat=2):
                    c = [0] * dim
                    c[i - 1], c[j - 1] = si, sj
                    roots.append(Root(tuple(c)))
        base = [_unit(i, dim) - _unit(i + 1, dim) for i in range(1, rank)]
        base.append(_unit(rank - 1, dim) + _unit(rank, dim))
        return dim, roots, base
    raise UnsupportedRank(f"unknown family {family!r}")


def _solve_int_combo(base: list[Root], target: Root) -> tuple[int, ...]:
    """Solve sum k_i * base_i = target exactly; the k_i must come out integral."""
    l = len(base)
    dim = len(target.coords)
    aug = [
        [Fraction(base[j].coords[i]) for j in range(l)] + [Fraction(target.coords[i])]
        for i in range(dim)
    ]
    pivots = []
    r = 0
    for c in range(l):
        pr = next((i for i in range(r, dim) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * l
    for row, c in enumerate(pivots):
        sol[c] = aug[row][l]
    for i in range(r, dim):
        if aug[i][l] != 0:
            raise RootNotInSystem(f"{target} is not in the span of the base")
    ints = []
    for x in sol:
        if x.denominator != 1:
            raise RootNotInSystem(f"{target} has a non-integral base expansion")
        ints.append(int(x))
    return tuple(ints)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    dim: int
    roots: tuple[Root, ...]  # canonical order: by height, then lex by coords
    base: tuple[Root, ...]
    expansions: dict = field(repr=False, compare=False, default_factory=dict)
    _set: frozenset = field(repr=False, compare=False, default_factory=frozenset)
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    def __contains__(self, r: Root) -> bool:
        return r in self._set

    def expansion(self, r: Root) -> tuple[int, ...]:
        """Coefficients of r over the base (all >= 0 or all <= 0)."""
        try:
            return self.expansions[r]
        except KeyError:
            raise RootNotInSystem(f"{r} not in {self.family}{self.rank}") from None

    def height(self, r: Root) -> int:
        return sum(self.expansion(r))

    def is_positive(self, r: Root) -> bool:
        return self.height(r) > 0

    @property
    def positives(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if self.height(r) > 0)

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    def index(self, r: Root) -> int:
        try:
            return self._index[r]
        except KeyError:
            raise RootNotInSystem(f"{r} not in {self.family}{self.rank}") from None

    def unit(self, i: int) -> Root | None:
        """e_i as a Root of this system's ambient space, or None if i > dim."""
        if not 1 <= i <= self.dim:
            return None
        return _unit(i, self.dim)


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the full root set and standard base, in canonical order."""
    if family not in FAMILIES:
        raise UnsupportedRank(f"family must be one of {FAMILIES}, got {family!r}")
    dim, roots, base = _family_roots(family, rank)
    expansions = {r: _solve_int_combo(base, r) for r in roots}
    heights = {r: sum(expansions[r]) for r in roots}
    ordered = tuple(sorted(roots, key=lambda r: (heights[r], r.coords)))
    index = {r: i for i, r in enumerate(ordered)}
    return RootSystem(
        family=family,
        rank=rank,
        dim=dim,
        roots=ordered,
        base=tuple(base),
        expansions=expansions,
        _set=frozenset(ordered),
        _index=index,
    )


def cartan_integer(beta: Root, alpha: Root) -> int:
    """<beta, alpha-check> = 2(beta,alpha)/(alpha,alpha); integral for root pairs."""
    den = alpha.dot(alpha)
    if den == 0:
        raise ValueError("alpha must be nonzero")
    num = 2 * beta.dot(alpha)
    if num % den != 0:
        raise ValueError(f"non-integral Cartan pairing for {beta}, {alpha}")
    return num // den


def reflect(beta: Root, alpha: Root) -> Root:
    """Reflection of beta in the hyperplane orthogonal to alpha."""
    k = cartan_integer(beta, alpha)
    return Root(tuple(b - k * a for b, a in zip(beta.coords, alpha.coords)))


def weyl_orbit(beta: Root, rs: RootSystem) -> frozenset[Root]:
    """Closure of {beta} under the simple reflections.

    For the supported (irreducible) systems this equals the set of all roots
    of the same squared length, which is asserted.
    """
    if beta not in rs:
        raise RootNotInSystem(f"{beta} not in {rs.family}{rs.rank}")
    seen = {beta}
    frontier = [beta]
    while frontier:
        nxt = []
        for r in frontier:
            for a in rs.base:
                s = reflect(r, a)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    same_length = {r for r in rs.roots if r.sq_length == beta.sq_length}
    assert seen == same_length, "orbit does not match the same-length root set"
    return frozenset(seen)


def root_string(beta: Root, alpha: Root, rs: RootSystem) -> tuple[int, int]:
    """(q_down, q_up): how far the alpha-string through beta extends in Phi."""
    if beta in (alpha, -alpha):
        raise ValueError("root_string requires beta != +-alpha")
    if beta not in rs or alpha not in rs:
        raise RootNotInSystem("both arguments must be roots of the system")
    q_down = 0
    cur = beta - alpha
    while cur in rs:
        q_down += 1
        cur = cur - alpha
    q_up = 0
    cur = beta + alpha
    while cur in rs:
        q_up += 1
        cur = cur + alpha
    return q_down, q_up
