"""Exact representations of posets and the Hom spaces between them.

A representation puts a vector space ``k^{dims[x]}`` on every element and a
matrix on every cover ``x < y`` (shape ``dims[y] x dims[x]``).  Paths with the
same ends must compose to the same matrix.
"""
from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, determinant, nullspace
from .poset import Poset, from_json
from .reptype import square_cycle_pattern


class RepError(ValueError):
    pass


@dataclass(frozen=True)
class PosetRep:
    base: Poset
    dims: tuple[int, ...]
    maps: dict  # (x, y) cover -> Matrix

    def __post_init__(self):
        if len(self.dims) != self.base.n or any(d < 0 for d in self.dims):
            raise RepError("need one nonnegative dimension per element")
        if set(self.maps) != set(self.base.covers):
            raise RepError("need exactly one matrix per cover")
        for (x, y), m in self.maps.items():
            if m.shape != (self.dims[y], self.dims[x]):
                raise RepError(f"map on {x}->{y} has shape {m.shape}, "
                               f"expected {(self.dims[y], self.dims[x])}")

    def to_json(self) -> dict:
        return {"poset": self.base.to_json(), "dims": list(self.dims),
                "maps": {f"{x}->{y}": [[str(v) for v in r] for r in self.maps[(x, y)].rows]
                         for x, y in self.base.covers}}

    @classmethod
    def from_json(cls, data: dict | str) -> "PosetRep":
        if isinstance(data, str):
            data = json.loads(data)
        P = from_json(data["poset"])
        dims = tuple(int(d) for d in data["dims"])
        maps = {}
        for key, rows in data["maps"].items():
            x, y = (int(t) for t in key.split("->"))
            maps[(x, y)] = Matrix(rows, dims[x]) if rows else Matrix.zeros(0, dims[x])
        return cls(P, dims, maps)


def constant_rep(P: Poset, d: int = 1) -> PosetRep:
    return PosetRep(P, (d,) * P.n, {e: Matrix.identity(d) for e in P.covers})


def simple_rep(P: Poset, x: int) -> PosetRep:
    dims = tuple(int(i == x) for i in range(P.n))
    return PosetRep(P, dims, {(a, b): Matrix.zeros(dims[b], dims[a]) for a, b in P.covers})


def validate_rep(R: PosetRep) -> tuple[bool, tuple[int, int] | None]:
    """Check that all cover paths between two elements give the same matrix.

    Returns ``(True, None)`` or ``(False, (x, y))`` for the first offending pair.
    """
    P = R.base
    for x in P.topo:
        prod = {x: Matrix.identity(R.dims[x])}
        for y in P.topo:
            if y == x or not P.up[x] >> y & 1:
                continue
            got = None
            for z in P.lower_covers[y]:
                if z in prod:
                    m = R.maps[(z, y)] @ prod[z]
                    if got is None:
                        got = m
                    elif m != got:
                        return False, (x, y)
            prod[y] = got
    return True, None


@dataclass(frozen=True)
class HomSpace:
    source: PosetRep
    target: PosetRep
    basis: tuple[tuple[Matrix, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs) -> tuple[Matrix, ...]:
        P = self.source.base
        out = []
        for x in range(P.n):
            m = Matrix.zeros(self.target.dims[x], self.source.dims[x])
            for c, b in zip(coeffs, self.basis):
                m = m + b[x].scale(Fraction(c))
            out.append(m)
        return tuple(out)


def is_natural(M: PosetRep, N: PosetRep, f) -> bool:
    return all(N.maps[e] @ f[e[0]] == f[e[1]] @ M.maps[e] for e in M.base.covers)


def hom_space(M: PosetRep, N: PosetRep) -> HomSpace:
    """Exact basis of natural transformations ``M -> N``."""
    if M.base != N.base:
        raise RepError("representations live on different posets")
    P = M.base
    offset = []
    total = 0
    for x in range(P.n):
        offset.append(total)
        total += N.dims[x] * M.dims[x]

    def var(x, i, j):  # entry (i, j) of f_x
        return offset[x] + i * M.dims[x] + j

    eqs = []
    for (x, y) in P.covers:
        A, B = N.maps[(x, y)], M.maps[(x, y)]
        for i in range(N.dims[y]):
            for j in range(M.dims[x]):
                row = [Fraction(0)] * total
                for k in range(N.dims[x]):  # (A f_x)[i][j]
                    row[var(x, k, j)] += A[i, k]
                for k in range(M.dims[y]):  # (f_y B)[i][j]
                    row[var(y, i, k)] -= B[k, j]
                if any(row):
                    eqs.append(row)
    basis = []
    for v in nullspace(Matrix(eqs, total)):
        col = [v[r, 0] for r in range(total)]
        basis.append(tuple(
            Matrix([[col[var(x, i, j)] for j in range(M.dims[x])] for i in range(N.dims[x])],
                   M.dims[x])
            for x in range(P.n)))
    return HomSpace(M, N, tuple(basis))


def _invertible(f) -> bool:
    return all(m.nrows == 0 or determinant(m) != 0 for m in f)


def is_isomorphic_reps(M: PosetRep, N: PosetRep, seed: int = 0, grid_cap: int = 100_000) -> bool:
    """Decide whether some natural transformation ``M -> N`` is invertible everywhere.

    A one-dimensional Hom space is settled by its generator.  Otherwise the
    product of the vertex determinants is a polynomial of total degree
    ``D = sum(dims)`` in the basis coefficients; it is nonzero iff it is
    nonzero somewhere on the grid ``{0..D}^dim``.  Random grid points are tried
    first and the full grid is scanned if none succeeds.
    """
    if M.dims != N.dims:
        return False
    H = hom_space(M, N)
    if sum(M.dims) == 0:
        return True
    if H.dim == 0:
        return False
    if H.dim == 1:
        return _invertible(H.basis[0])
    D = sum(M.dims)
    rng = random.Random(seed)
    for _ in range(64):
        if _invertible(H.combine([rng.randint(-10 * D, 10 * D) for _ in range(H.dim)])):
            return True
    if (D + 1) ** H.dim > grid_cap:
        raise RepError(f"Hom space of dimension {H.dim} too large for an exact isomorphism test")
    return any(_invertible(H.combine(t)) for t in itertools.product(range(D + 1), repeat=H.dim))


# ---------------------------------------------------------------------------
# the M(lambda) and M(lambda, mu) families

def _cover_key(P: Poset, edge) -> tuple[int, int]:
    x, y = edge
    if P.is_cover(x, y):
        return x, y
    if P.is_cover(y, x):
        return y, x
    raise RepError(f"{tuple(edge)} is not a cover of the poset")


def build_M_lambda(Y: Poset, alpha, lam) -> PosetRep:
    """One-dimensional spaces on a cycle; ``alpha`` scales by ``lam``, other covers are 1."""
    adj = Y.hasse_adjacency()
    if len(Y.covers) != Y.n or any(len(a) != 2 for a in adj):
        raise RepError("base poset must have a single cycle as Hasse diagram")
    alpha = _cover_key(Y, alpha)
    lam = Fraction(lam)
    maps = {e: Matrix([[lam if e == alpha else 1]]) for e in Y.covers}
    return PosetRep(Y, (1,) * Y.n, maps)


@dataclass(frozen=True)
class SquarePattern:
    """``omega``, the cycle elements, the square ``(omega, a, b, M)`` and its orientation."""

    omega: int
    cycle: tuple[int, ...]
    square: tuple[int, int, int, int]
    orientation: str  # "min": omega below a and b; "max": omega above them


def find_square_pattern(X: Poset, omega: int | None = None) -> SquarePattern:
    """Read ``X`` as a cycle plus one element closing a commutative square."""
    candidates = range(X.n) if omega is None else [omega]
    for w in candidates:
        cyc = [v for v in range(X.n) if v != w]
        data = square_cycle_pattern(X, cyc, w)
        if data is not None:
            return SquarePattern(w, tuple(cyc), tuple(data["square"]), data["orientation"])
    raise RepError("poset is not a cycle plus one element closing a commutative square")


def _cycle_distances(X: Poset, pat: SquarePattern) -> dict[int, int]:
    """Hasse distance inside the cycle from the square's cycle vertices."""
    cyc = set(pat.cycle)
    dist = {v: 0 for v in pat.square[1:]}
    queue = deque(dist)
    adj = X.hasse_adjacency()
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in cyc and w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def square_edges(pat: SquarePattern) -> set[tuple[int, int]]:
    _, a, b, m = pat.square
    if pat.orientation == "min":
        return {(a, m), (b, m)}
    return {(m, a), (m, b)}


def default_alpha(X: Poset, pat: SquarePattern) -> tuple[int, int]:
    """Cycle cover farthest from the square; ties go to the first in cover order."""
    dist = _cycle_distances(X, pat)
    cyc = set(pat.cycle)
    best = None
    for x, y in X.covers:
        if x in cyc and y in cyc and (x, y) not in square_edges(pat):
            d = min(dist[x], dist[y])
            if best is None or d > best[0]:
                best = (d, (x, y))
    return best[1]


def build_M_lambda_mu(X: Poset, lam, mu, alpha=None, omega: int | None = None) -> PosetRep:
    """Two-dimensional spaces on the cycle, one-dimensional at omega.

    ``alpha`` carries ``diag(lam, mu)``; the other cycle covers carry the
    identity.  The two covers at omega carry the diagonal ``(1, 1)^T`` when
    omega is the bottom of the square and the sum map ``(1, 1)`` when it is
    the top.
    """
    lam, mu = Fraction(lam), Fraction(mu)
    if lam == mu:
        raise RepError("the family needs lambda != mu")
    pat = find_square_pattern(X, omega)
    if alpha is None:
        alpha = default_alpha(X, pat)
    alpha = _cover_key(X, alpha)
    if pat.omega in alpha:
        raise RepError("alpha must be a cover of the cycle")
    if alpha in square_edges(pat):
        raise RepError("alpha must lie outside the commutative square")
    dims = tuple(1 if v == pat.omega else 2 for v in range(X.n))
    maps = {}
    for e in X.covers:
        if pat.omega == e[0]:
            maps[e] = Matrix([[1], [1]])
        elif pat.omega == e[1]:
            maps[e] = Matrix([[1, 1]])
        elif e == alpha:
            maps[e] = Matrix([[lam, 0], [0, mu]])
        else:
            maps[e] = Matrix.identity(2)
    return PosetRep(X, dims, maps)
