"""Finite posets stored as bitset order relations.

Elements are ``0..n-1``.  ``up[x]`` is the bitmask of all ``y >= x`` and
``down[y]`` the bitmask of all ``x <= y``; covers are always recomputed from
the order (transitive reduction), never trusted from input.
"""
from __future__ import annotations

import heapq
import itertools
import json
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class CycleError(ValueError):
    """Raised when the input relation contains a directed cycle."""

    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__(f"relation contains a cycle: {' -> '.join(map(str, cycle))}")


class NoUniqueExtremum(ValueError):
    def __init__(self, which: str, elements: list[int]):
        self.elements = elements
        super().__init__(f"no unique {which} element; {which} antichain is {elements}")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _find_cycle(n: int, succ: list[set[int]], alive: set[int]) -> list[int]:
    # every vertex left after Kahn's algorithm has a successor that is also left
    start = min(alive)
    seen: dict[int, int] = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = min(w for w in succ[v] if w in alive)
    return path[seen[v]:] + [v]


class Poset:
    """An immutable finite poset.

    Build one with :func:`from_covers` (any acyclic relation is accepted and
    normalised) or one of the constructors at the bottom of this module.
    """

    __slots__ = ("n", "labels", "up", "down", "covers", "upper_covers", "lower_covers", "topo",
                 "_cache")

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        n = len(labels)
        self.n = n
        self.labels = tuple(str(s) for s in labels)
        self.up = tuple(up)
        down = [0] * n
        for x in range(n):
            for y in bits(self.up[x]):
                down[y] |= 1 << x
        self.down = tuple(down)
        upper: list[list[int]] = [[] for _ in range(n)]
        lower: list[list[int]] = [[] for _ in range(n)]
        covers = []
        for x in range(n):
            strict = self.up[x] & ~(1 << x)
            for y in bits(strict):
                if not (self.down[y] & strict & ~(1 << y)):
                    upper[x].append(y)
                    lower[y].append(x)
                    covers.append((x, y))
        self.covers = tuple(covers)
        self.upper_covers = tuple(tuple(u) for u in upper)
        self.lower_covers = tuple(tuple(lo) for lo in lower)
        self.topo = _linear_extension(n, self.lower_covers, self.upper_covers)
        self._cache = {}

    # order queries -------------------------------------------------------
    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def is_cover(self, x: int, y: int) -> bool:
        return y in self.upper_covers[x]

    def strict_up(self, x: int) -> int:
        return self.up[x] & ~(1 << x)

    def strict_down(self, x: int) -> int:
        return self.down[x] & ~(1 << x)

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.lower_covers[x]]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.upper_covers[x]]

    def bottom(self) -> int | None:
        m = self.minimal_elements()
        return m[0] if len(m) == 1 else None

    def top(self) -> int | None:
        m = self.maximal_elements()
        return m[0] if len(m) == 1 else None

    def heights(self) -> tuple[int, ...]:
        if "heights" not in self._cache:
            h = [0] * self.n
            for x in self.topo:
                for y in self.upper_covers[x]:
                    h[y] = max(h[y], h[x] + 1)
            self._cache["heights"] = tuple(h)
        return self._cache["heights"]

    def depths(self) -> tuple[int, ...]:
        if "depths" not in self._cache:
            d = [0] * self.n
            for x in reversed(self.topo):
                for y in self.lower_covers[x]:
                    d[y] = max(d[y], d[x] + 1)
            self._cache["depths"] = tuple(d)
        return self._cache["depths"]

    def hasse_edges(self) -> list[tuple[int, int]]:
        return list(self.covers)

    def hasse_adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for x, y in self.covers:
            adj[x].add(y)
            adj[y].add(x)
        return adj

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    # structural equality is label- and index-sensitive
    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return hash((self.labels, self.up))

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.covers)})"

    # serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        return {"labels": list(self.labels), "covers": [list(c) for c in self.covers]}

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    def to_dot(self, name: str = "P") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            esc = lab.replace('"', '\\"')
            lines.append(f'  {i} [label="{esc}"];')
        for x, y in self.covers:
            lines.append(f"  {x} -> {y};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _linear_extension(n, lower, upper) -> tuple[int, ...]:
    indeg = [len(lower[x]) for x in range(n)]
    heap = [x for x in range(n) if indeg[x] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        x = heapq.heappop(heap)
        out.append(x)
        for y in upper[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    return tuple(out)


def from_covers(labels: Sequence[str] | int, pairs: Iterable[Sequence[int]]) -> Poset:
    """Poset generated by the relation ``x < y`` for each pair ``(x, y)``.

    ``labels`` may be an int, in which case elements are labelled ``"0".."n-1"``.
    Redundant pairs are dropped by transitive reduction.
    """
    if isinstance(labels, int):
        labels = [str(i) for i in range(labels)]
    n = len(labels)
    succ: list[set[int]] = [set() for _ in range(n)]
    for p in pairs:
        x, y = int(p[0]), int(p[1])
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"pair {(x, y)} out of range for {n} elements")
        if x == y:
            raise CycleError([x, x])
        succ[x].add(y)
    indeg = [0] * n
    for x in range(n):
        for y in succ[x]:
            indeg[y] += 1
    queue = [x for x in range(n) if indeg[x] == 0]
    order = []
    while queue:
        x = queue.pop()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    if len(order) < n:
        alive = set(range(n)) - set(order)
        raise CycleError(_find_cycle(n, succ, alive))
    up = [0] * n
    for x in reversed(order):
        m = 1 << x
        for y in succ[x]:
            m |= up[y]
        up[x] = m
    return Poset(labels, up)


def from_json(data: dict | str) -> Poset:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "labels" not in data or "covers" not in data:
        raise ValueError("poset JSON needs 'labels' and 'covers'")
    return from_covers(list(data["labels"]), data["covers"])


def from_order(labels: Sequence[str], leq) -> Poset:
    """Poset from a predicate ``leq(i, j)`` that is already a partial order."""
    n = len(labels)
    up = [sum(1 << j for j in range(n) if i == j or leq(i, j)) for i in range(n)]
    return Poset(labels, up)


# ---------------------------------------------------------------------------
# morphisms

@dataclass(frozen=True)
class PosetMorphism:
    source: Poset
    target: Poset
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise ValueError("mapping length does not match source size")
        for x, y in self.source.covers:
            if not self.target.leq(self.mapping[x], self.mapping[y]):
                raise ValueError(f"not order-preserving on the pair {(x, y)}")

    def is_surjective(self) -> bool:
        return set(self.mapping) == set(range(self.target.n))

    def fiber(self, y: int) -> list[int]:
        return [x for x, fx in enumerate(self.mapping) if fx == y]

    def fibers(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.target.n)]
        for x, fx in enumerate(self.mapping):
            out[fx].append(x)
        return out


# ---------------------------------------------------------------------------
# subposets and connectivity

def induced_subposet(P: Poset, S: Sequence[int]) -> Poset:
    """Restriction of the order of ``P`` to ``S`` (in the given order).

    Covers are recomputed from the restricted order, so two elements of ``S``
    separated in ``P`` only by elements outside ``S`` become a cover.
    """
    S = list(S)
    if len(set(S)) != len(S):
        raise ValueError("repeated element in subset")
    pos = {x: i for i, x in enumerate(S)}
    up = []
    for x in S:
        m = 0
        for y in bits(P.up[x]):
            i = pos.get(y)
            if i is not None:
                m |= 1 << i
        up.append(m)
    return Poset([P.labels[x] for x in S], up)


def is_connected_subset(P: Poset, S: Iterable[int]) -> bool:
    """Whether the comparability graph of ``P`` restricted to ``S`` is connected."""
    S = list(S)
    if not S:
        return False
    mask = sum(1 << x for x in S)
    seen = 1 << S[0]
    frontier = [S[0]]
    while frontier:
        x = frontier.pop()
        nb = (P.up[x] | P.down[x]) & mask & ~seen
        seen |= nb
        frontier.extend(bits(nb))
    return seen == mask


def is_connected(P: Poset) -> bool:
    return P.n > 0 and is_connected_subset(P, range(P.n))


# ---------------------------------------------------------------------------
# lattice checks

def lattice_tables(P: Poset) -> tuple[list[list[int]], list[list[int]]] | None:
    """Join and meet tables if ``P`` is a lattice, else ``None``."""
    n = P.n
    if n == 0:
        return None
    join = [[-1] * n for _ in range(n)]
    meet = [[-1] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            ub = P.up[x] & P.up[y]
            j = next((z for z in bits(ub) if P.up[z] == ub), None)
            lb = P.down[x] & P.down[y]
            m = next((z for z in bits(lb) if P.down[z] == lb), None)
            if j is None or m is None:
                return None
            join[x][y] = join[y][x] = j
            meet[x][y] = meet[y][x] = m
    return join, meet


def is_lattice(P: Poset) -> bool:
    return lattice_tables(P) is not None


# ---------------------------------------------------------------------------
# path counting and degrees

def path_unique_violation(P: Poset) -> tuple[int, int, int] | None:
    """First pair ``(x, y)`` joined by more than one cover path, with the count."""
    pos = {x: i for i, x in enumerate(P.topo)}
    for x in P.topo:
        cnt = {x: 1}
        for y in P.topo[pos[x] + 1:]:
            if not P.up[x] >> y & 1:
                continue
            c = sum(cnt.get(z, 0) for z in P.lower_covers[y])
            if c > 1:
                return x, y, c
            cnt[y] = c
    return None


def is_path_unique(P: Poset) -> bool:
    return path_unique_violation(P) is None


def path_counts_from(P: Poset, x: int) -> dict[int, int]:
    """Exact number of cover paths from ``x`` to each ``y >= x``."""
    cnt = {x: 1}
    for y in P.topo:
        if y != x and P.up[x] >> y & 1:
            cnt[y] = sum(cnt.get(z, 0) for z in P.lower_covers[y])
    return cnt


@dataclass(frozen=True)
class Regularity:
    degrees: tuple[int, ...]
    uniform: int | None

    def multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))


def hasse_regularity(P: Poset) -> Regularity:
    deg = tuple(len(P.upper_covers[x]) + len(P.lower_covers[x]) for x in range(P.n))
    uniform = deg[0] if deg and all(d == deg[0] for d in deg) else None
    return Regularity(deg, uniform)


# ---------------------------------------------------------------------------
# constructions

def _fresh(labels: Sequence[str], base: str) -> str:
    taken = set(labels)
    if base not in taken:
        return base
    for k in itertools.count(1):
        cand = f"{base}{k}"
        if cand not in taken:
            return cand
    raise AssertionError


def chain(k: int) -> Poset:
    return from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return from_covers(k, [])


def dual(P: Poset) -> Poset:
    return Poset(P.labels, P.down)


def product(P: Poset, Q: Poset) -> Poset:
    """Cartesian product with componentwise order; element ``(p, q)`` is ``p*|Q|+q``."""
    m = Q.n
    labels = [f"({a},{b})" for a in P.labels for b in Q.labels]
    up = []
    for p in range(P.n):
        for q in range(m):
            mask = 0
            for p2 in bits(P.up[p]):
                for q2 in bits(Q.up[q]):
                    mask |= 1 << (p2 * m + q2)
            up.append(mask)
    return Poset(labels, up)


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    labels = list(P.labels)
    for lab in Q.labels:
        labels.append(_fresh(labels, lab) if lab in labels else lab)
    up = list(P.up) + [m << P.n for m in Q.up]
    return Poset(labels, up)


def add_bottom(P: Poset, label: str = "bot") -> Poset:
    """New element 0 below everything; old elements shift up by one."""
    full = (1 << (P.n + 1)) - 1
    up = [full] + [m << 1 for m in P.up]
    return Poset([_fresh(P.labels, label)] + list(P.labels), up)


def add_top(P: Poset, label: str = "top") -> Poset:
    """New element ``n`` above everything."""
    top = 1 << P.n
    up = [m | top for m in P.up] + [top]
    return Poset(list(P.labels) + [_fresh(P.labels, label)], up)


def cube(n: int) -> Poset:
    """Boolean lattice of subsets of an n-set; labels are 0/1 strings."""
    labels = [format(i, f"0{n}b") if n else "" for i in range(1 << n)]
    up = []
    for i in range(1 << n):
        up.append(sum(1 << j for j in range(1 << n) if i & j == i))
    return Poset(labels, up)


def flip_flop(P: Poset, label: str = "bot") -> Poset:
    """Remove the unique maximum and adjoin a new global minimum.

    The new minimum becomes element 0; remaining elements keep their
    relative order.
    """
    top = P.top()
    if top is None:
        raise NoUniqueExtremum("maximal", P.maximal_elements())
    keep = [x for x in range(P.n) if x != top]
    rest = induced_subposet(P, keep)
    return add_bottom(rest, label)


def flip_flop_dual(P: Poset, label: str = "top") -> Poset:
    """Remove the unique minimum and adjoin a new global maximum."""
    if P.bottom() is None:
        raise NoUniqueExtremum("minimal", P.minimal_elements())
    return dual(flip_flop(dual(P), label))


def order_ideals(P: Poset, max_size: int = 25) -> list[int]:
    """All down-closed subsets of ``P`` as bitmasks, sorted by (size, mask)."""
    if P.n > max_size:
        raise ValueError(f"order ideal enumeration limited to {max_size} elements, got {P.n}")
    strict_down = [P.strict_down(x) for x in range(P.n)]
    seen = {0}
    stack = [0]
    while stack:
        ideal = stack.pop()
        for x in range(P.n):
            if not ideal >> x & 1 and strict_down[x] & ~ideal == 0:
                nxt = ideal | 1 << x
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return sorted(seen, key=lambda m: (popcount(m), m))


def ideal_generators(P: Poset, ideal: int) -> list[int]:
    """The antichain of maximal elements of an order ideal."""
    return [x for x in bits(ideal) if not P.strict_up(x) & ideal]


def order_ideals_lattice(P: Poset, max_size: int = 25) -> Poset:
    """Lattice of order ideals under inclusion, labelled ``L(a,b,...)`` by generators."""
    ideals = order_ideals(P, max_size)
    return ideals_poset(P, ideals)


def ideals_poset(P: Poset, ideals: list[int]) -> Poset:
    """Inclusion order on the given ideals of ``P`` (covers add one element)."""
    index = {m: i for i, m in enumerate(ideals)}
    labels = ["L(" + ",".join(P.labels[x] for x in ideal_generators(P, m)) + ")" for m in ideals]
    pairs = []
    for m, i in index.items():
        for x in range(P.n):
            if not m >> x & 1:
                j = index.get(m | 1 << x)
                if j is not None:
                    pairs.append((i, j))
    return from_covers(labels, pairs)


# ---------------------------------------------------------------------------
# isomorphism

def _refined_colors(P: Poset, Q: Poset) -> tuple[list[int], list[int]]:
    def start(R: Poset):
        h, d = R.heights(), R.depths()
        return [(h[x], d[x], len(R.lower_covers[x]), len(R.upper_covers[x]),
                 popcount(R.up[x]), popcount(R.down[x])) for x in range(R.n)]

    cp, cq = start(P), start(Q)
    ncls = -1
    while True:
        palette = {c: i for i, c in enumerate(sorted(set(cp) | set(cq)))}
        ip = [palette[c] for c in cp]
        iq = [palette[c] for c in cq]
        if len(palette) == ncls:
            return ip, iq
        ncls = len(palette)
        cp = [(ip[x], tuple(sorted(ip[y] for y in P.upper_covers[x])),
               tuple(sorted(ip[y] for y in P.lower_covers[x]))) for x in range(P.n)]
        cq = [(iq[x], tuple(sorted(iq[y] for y in Q.upper_covers[x])),
               tuple(sorted(iq[y] for y in Q.lower_covers[x]))) for x in range(Q.n)]


def is_isomorphic(P: Poset, Q: Poset) -> list[int] | None:
    """An order isomorphism ``P -> Q`` as a list ``f[x]``, or ``None``."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return None
    if P.n == 0:
        return []
    cp, cq = _refined_colors(P, Q)
    if sorted(cp) != sorted(cq):
        return None
    by_color: dict[int, list[int]] = {}
    for y, c in enumerate(cq):
        by_color.setdefault(c, []).append(y)
    # visit elements so each one (after the first) is adjacent to an earlier one
    order: list[int] = []
    placed = set()
    adj = P.hasse_adjacency()
    for root in sorted(range(P.n), key=lambda x: (len(by_color[cp[x]]), x)):
        if root in placed:
            continue
        queue = [root]
        placed.add(root)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(adj[x], key=lambda z: (len(by_color[cp[z]]), z)):
                if y not in placed:
                    placed.add(y)
                    queue.append(y)
    f = [-1] * P.n
    used = [False] * Q.n

    def ok(x: int, y: int, k: int) -> bool:
        for x2 in order[:k]:
            y2 = f[x2]
            if P.leq(x2, x) != Q.leq(y2, y) or P.leq(x, x2) != Q.leq(y, y2):
                return False
        return True

    def search(k: int) -> bool:
        if k == P.n:
            return True
        x = order[k]
        for y in by_color[cp[x]]:
            if used[y] or not ok(x, y, k):
                continue
            f[x] = y
            used[y] = True
            if search(k + 1):
                return True
            used[y] = False
            f[x] = -1
        return False

    if sys.getrecursionlimit() < P.n + 100:
        sys.setrecursionlimit(P.n + 100)
    return list(f) if search(0) else None
