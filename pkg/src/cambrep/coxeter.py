"""Finite Coxeter groups, weak order, c-sortable elements and Cambrian lattices.

Every group acts faithfully on its (finite) root system, so an element is
stored as the permutation it induces on the roots.  Roots of the A, B and H
factors come from the geometric representation with exact entries in
Q(sqrt d); the dihedral factor I2(h) is encoded combinatorially as the 2h
directions at angles k*pi/h, which needs no field arithmetic at all.
Reducible groups act on the disjoint union of their factors' root systems.

Conventions: right weak order, ``w < ws`` whenever ``l(ws) = l(w) + 1``;
the inversion set of ``w`` is ``N(w) = {beta > 0 : w^-1(beta) < 0}`` so that
``u <= w`` iff ``N(u)`` is contained in ``N(w)``.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .exact import QuadScalar
from .poset import Poset, PosetMorphism, bits, from_covers, induced_subposet, popcount

MAX_GROUP_ORDER = 10_000


class UnsupportedType(ValueError):
    pass


@dataclass(frozen=True)
class Factor:
    """One irreducible factor: family letter and rank (``h`` for I2)."""

    family: str  # "A", "B", "C", "H" or "I"
    rank: int
    h: int = 0

    def __str__(self):
        if self.family == "I":
            return f"I2({self.h})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        if self.family == "A":
            return math.factorial(self.rank + 1)
        if self.family in "BC":
            return 2 ** self.rank * math.factorial(self.rank)
        if self.family == "H":
            return {3: 120}[self.rank]
        return 2 * self.h

    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]

        def link(i, j, v):
            m[i][j] = m[j][i] = v

        if self.family == "A":
            for i in range(n - 1):
                link(i, i + 1, 3)
        elif self.family in "BC":
            for i in range(n - 2):
                link(i, i + 1, 3)
            link(n - 2, n - 1, 4)
        elif self.family == "H":
            link(0, 1, 5)
            link(1, 2, 3)
        else:
            link(0, 1, self.h)
        return m


@dataclass(frozen=True)
class CoxeterType:
    factors: tuple[Factor, ...]

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def order(self) -> int:
        return math.prod(f.order for f in self.factors)

    def is_crystallographic(self) -> bool:
        return all(f.family in "ABC" or (f.family == "I" and f.h in (3, 4, 6)) for f in self.factors)

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


_FACTOR_RE = re.compile(r"^(?:([ABCH])(\d+)|I2\((\d+)\))$")


def parse_type(text: str) -> CoxeterType:
    """Parse ``A3``, ``B3``, ``H3``, ``I2(7)``, ``A1xA1xA1``, ``A1xI2(5)``, ``(A1)^3``."""
    s = text.strip().replace(" ", "").replace("×", "x")
    power = re.fullmatch(r"\(?([ABCH]\d+|I2\(\d+\))\)?\^(\d+)", s)
    if power:
        s = "x".join([power.group(1)] * int(power.group(2)))
    factors = []
    for part in s.split("x"):
        m = _FACTOR_RE.match(part)
        if not m:
            raise UnsupportedType(f"cannot parse Coxeter type {text!r}")
        if m.group(3):
            h = int(m.group(3))
            if h < 3:
                raise UnsupportedType("I2(h) needs h >= 3")
            factors.append(Factor("I", 2, h))
            continue
        fam, n = m.group(1), int(m.group(2))
        if fam == "A" and not 1 <= n <= 4:
            raise UnsupportedType("type A supported for rank 1..4")
        if fam in "BC" and not 2 <= n <= 4:
            raise UnsupportedType(f"type {fam} supported for rank 2..4")
        if fam == "H" and n != 3:
            raise UnsupportedType("only H3 is supported among type H")
        factors.append(Factor(fam, n))
    return CoxeterType(tuple(factors))


def parse_coxeter_element(text: str, rank: int) -> tuple[int, ...]:
    """Parse ``"1,2,3"`` (optionally prefixed ``c=``) into a generator order."""
    s = text.strip()
    if s.startswith("c="):
        s = s[2:]
    try:
        order = tuple(int(t) for t in s.split(",") if t.strip())
    except ValueError as exc:
        raise ValueError(f"bad Coxeter element {text!r}") from exc
    check_coxeter_element(order, rank)
    return order


def check_coxeter_element(order, rank: int) -> None:
    if sorted(order) != list(range(1, rank + 1)):
        raise ValueError(f"Coxeter element must use each of 1..{rank} exactly once, got {order}")


# ---------------------------------------------------------------------------
# root systems as permutation data

def _cos_pi_over(m: int) -> QuadScalar:
    if m == 2:
        return QuadScalar(0)
    if m == 3:
        return QuadScalar(Fraction(1, 2))
    if m == 4:
        return QuadScalar(0, Fraction(1, 2), 2)
    if m == 5:
        return QuadScalar(Fraction(1, 4), Fraction(1, 4), 5)
    if m == 6:
        return QuadScalar(0, Fraction(1, 2), 3)
    raise UnsupportedType(f"cos(pi/{m}) is not in a quadratic field")


@dataclass(frozen=True)
class RootData:
    """Finite root system encoded for permutation arithmetic.

    ``reflections[i][r]`` is the index of ``s_i(root r)``; ``positive[r]``
    tells the sign; ``simple[i]`` is the index of the i-th simple root.
    ``vectors`` holds exact simple-basis coordinates when known.
    """

    rank: int
    positive: tuple[bool, ...]
    simple: tuple[int, ...]
    reflections: tuple[tuple[int, ...], ...]
    vectors: tuple[tuple, ...] | None = None


def geometric_roots(coxeter_matrix: list[list[int]]) -> RootData:
    n = len(coxeter_matrix)
    bil = [[-_cos_pi_over(coxeter_matrix[i][j]) if i != j else QuadScalar(1) for j in range(n)]
           for i in range(n)]

    def reflect(v, i):
        c = sum((v[j] * bil[j][i] for j in range(n)), QuadScalar(0))
        out = list(v)
        out[i] = v[i] - 2 * c
        return tuple(out)

    simple = [tuple(QuadScalar(int(i == j)) for j in range(n)) for i in range(n)]
    index = {v: k for k, v in enumerate(simple)}
    roots = list(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = reflect(v, i)
            if w not in index:
                index[w] = len(roots)
                roots.append(w)
                queue.append(w)
                if len(roots) > 4 * MAX_GROUP_ORDER:
                    raise UnsupportedType("root system is not finite")
    positive = []
    for v in roots:
        signs = {c.sign() for c in v} - {0}
        if len(signs) != 1:
            raise ArithmeticError(f"root {v} is neither positive nor negative")
        positive.append(signs == {1})
    refl = tuple(tuple(index[reflect(v, i)] for v in roots) for i in range(n))
    return RootData(n, tuple(positive), tuple(range(n)), refl, tuple(roots))


def dihedral_roots(h: int) -> RootData:
    """Roots of I2(h) as the 2h directions ``k*pi/h``; alpha_1 at k=0, alpha_2 at k=h-1.

    The reflection orthogonal to the direction ``phi`` sends ``theta`` to
    ``2*phi + pi - theta``.
    """
    two_h = 2 * h
    s1 = tuple((h - k) % two_h for k in range(two_h))
    s2 = tuple((2 * (h - 1) + h - k) % two_h for k in range(two_h))
    positive = tuple(k < h for k in range(two_h))
    return RootData(2, positive, (0, h - 1), (s1, s2))


def factor_roots(f: Factor) -> RootData:
    if f.family == "I":
        return dihedral_roots(f.h)
    return geometric_roots(f.coxeter_matrix())


def _combine(parts: list[RootData]) -> RootData:
    positive: list[bool] = []
    simple: list[int] = []
    refl: list[tuple[int, ...]] = []
    total = sum(len(p.positive) for p in parts)
    offset = 0
    for p in parts:
        size = len(p.positive)
        positive.extend(p.positive)
        simple.extend(offset + s for s in p.simple)
        for r in p.reflections:
            perm = list(range(total))
            for k in range(size):
                perm[offset + k] = offset + r[k]
            refl.append(tuple(perm))
        offset += size
    return RootData(len(simple), tuple(positive), tuple(simple), tuple(refl))


# ---------------------------------------------------------------------------
# the group

class CoxeterGroup:
    """A finite Coxeter group with all elements enumerated.

    Elements are integers ``0..|W|-1`` in breadth-first order from the
    identity (element 0); generators are numbered ``1..n``.
    """

    def __init__(self, ctype: CoxeterType):
        if ctype.order > MAX_GROUP_ORDER:
            raise UnsupportedType(f"group order {ctype.order} exceeds {MAX_GROUP_ORDER}")
        self.type = ctype
        self.rank = ctype.rank
        parts = [factor_roots(f) for f in ctype.factors]
        self.roots = parts[0] if len(parts) == 1 else _combine(parts)
        pos_index = [-1] * len(self.roots.positive)
        k = 0
        for r, p in enumerate(self.roots.positive):
            if p:
                pos_index[r] = k
                k += 1
        self.num_positive_roots = k
        self._pos_index = pos_index
        self._enumerate()

    @property
    def coxeter_matrix(self) -> list[list[int]]:
        n = self.rank
        m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        off = 0
        for f in self.type.factors:
            fm = f.coxeter_matrix()
            for i in range(f.rank):
                for j in range(f.rank):
                    m[off + i][off + j] = fm[i][j]
            off += f.rank
        return m

    def _enumerate(self) -> None:
        refl = self.roots.reflections
        nroots = len(self.roots.positive)
        ident = tuple(range(nroots))
        perms = [ident]
        index = {ident: 0}
        words: list[tuple[int, ...]] = [()]
        right: list[list[int]] = []
        queue = deque([0])
        while queue:
            w = queue.popleft()
            pw = perms[w]
            row = []
            for i, s in enumerate(refl):
                ws = tuple(pw[s[r]] for r in range(nroots))
                j = index.get(ws)
                if j is None:
                    j = len(perms)
                    if j >= MAX_GROUP_ORDER:
                        raise UnsupportedType("group enumeration exceeded the size bound")
                    index[ws] = j
                    perms.append(ws)
                    words.append(words[w] + (i + 1,))
                    queue.append(j)
                row.append(j)
            right.append(row)
        self.perms = perms
        self._index = index
        self.words = words
        self.right_table = right
        positive = self.roots.positive
        inv = []
        for pw in perms:
            # N(w) = positive roots that are images of negative roots
            m = 0
            for r in range(nroots):
                if not positive[r] and positive[pw[r]]:
                    m |= 1 << self._pos_index[pw[r]]
            inv.append(m)
        self.inversions = inv
        self.lengths = [popcount(m) for m in inv]
        self.left_table = [[index[tuple(s[pw[r]] for r in range(nroots))] for s in refl] for pw in perms]

    # element queries -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def identity(self) -> int:
        return 0

    @property
    def longest(self) -> int:
        top = max(self.lengths)
        cands = [w for w, ell in enumerate(self.lengths) if ell == top]
        if len(cands) != 1:
            raise ArithmeticError("longest element is not unique")
        return cands[0]

    def length(self, w: int) -> int:
        return self.lengths[w]

    def right_mul(self, w: int, i: int) -> int:
        """Index of ``w s_i`` (``i`` is 1-based)."""
        return self.right_table[w][i - 1]

    def left_mul(self, i: int, w: int) -> int:
        """Index of ``s_i w``."""
        return self.left_table[w][i - 1]

    def multiply(self, u: int, v: int) -> int:
        pu, pv = self.perms[u], self.perms[v]
        return self._index[tuple(pu[pv[r]] for r in range(len(pu)))]

    def from_word(self, word) -> int:
        w = 0
        for i in word:
            w = self.right_mul(w, i)
        return w

    def word_label(self, w: int) -> str:
        word = self.words[w]
        if not word:
            return "e"
        sep = "" if self.rank < 10 else "."
        return sep.join(map(str, word))

    def weak_leq(self, u: int, w: int) -> bool:
        return self.inversions[u] & ~self.inversions[w] == 0

    def left_descents(self, w: int) -> list[int]:
        return [i for i in range(1, self.rank + 1) if self.lengths[self.left_mul(i, w)] < self.lengths[w]]

    def coxeter_elements(self) -> list[tuple[int, ...]]:
        """All generator orders, one per distinct Coxeter element (first order wins)."""
        seen: dict[int, tuple[int, ...]] = {}
        for order in itertools.permutations(range(1, self.rank + 1)):
            c = self.from_word(order)
            seen.setdefault(c, order)
        return list(seen.values())


_GROUP_CACHE: dict[str, CoxeterGroup] = {}


def build_group(t: CoxeterType | str) -> CoxeterGroup:
    if isinstance(t, str):
        t = parse_type(t)
    key = str(t).replace("C", "B")
    g = _GROUP_CACHE.get(key)
    if g is None:
        g = _GROUP_CACHE[key] = CoxeterGroup(t)
    return g


# ---------------------------------------------------------------------------
# weak order and sorting

def weak_order(G: CoxeterGroup) -> Poset:
    pairs = []
    for w in range(G.order):
        for i in range(1, G.rank + 1):
            ws = G.right_mul(w, i)
            if G.lengths[ws] == G.lengths[w] + 1:
                pairs.append((w, ws))
    return from_covers([G.word_label(w) for w in range(G.order)], pairs)


def c_sorting_word(G: CoxeterGroup, w: int, c) -> list[list[int]]:
    """The c-sorting word of ``w`` split into passes through ``c``.

    Scans ``c c c ...`` and takes each letter that is a left descent of what
    is left of ``w``.  Concatenating the passes gives a reduced word.
    """
    check_coxeter_element(tuple(c), G.rank)
    passes: list[list[int]] = []
    u = w
    while G.lengths[u]:
        cur = []
        for s in c:
            su = G.left_mul(s, u)
            if G.lengths[su] < G.lengths[u]:
                cur.append(s)
                u = su
        if not cur:
            raise ArithmeticError("sorting pass made no progress")
        passes.append(cur)
    return passes


def is_c_sortable(G: CoxeterGroup, w: int, c) -> bool:
    supports = [set(b) for b in c_sorting_word(G, w, c)]
    return all(later <= earlier for earlier, later in zip(supports, supports[1:]))


def sortable_elements(G: CoxeterGroup, c) -> list[int]:
    return [w for w in range(G.order) if is_c_sortable(G, w, c)]


def cambrian(G: CoxeterGroup, c) -> Poset:
    """Weak order restricted to the c-sortable elements."""
    return induced_subposet(weak_order(G), sortable_elements(G, c))


def pi_down(G: CoxeterGroup, c, w: int, sortables: list[int] | None = None) -> int:
    """Largest c-sortable element below ``w`` in weak order (checked, not assumed)."""
    if sortables is None:
        sortables = sortable_elements(G, c)
    below = [v for v in sortables if G.weak_leq(v, w)]
    tops = [v for v in below if all(G.weak_leq(u, v) for u in below)]
    if len(tops) != 1:
        raise ArithmeticError(f"sortables below {G.word_label(w)} have no unique maximum")
    return tops[0]


def pi_down_morphism(G: CoxeterGroup, c) -> PosetMorphism:
    """``pi_down`` as a morphism from the weak order onto the Cambrian lattice."""
    sortables = sortable_elements(G, c)
    pos = {v: i for i, v in enumerate(sortables)}
    source = weak_order(G)
    target = induced_subposet(source, sortables)
    mapping = tuple(pos[pi_down(G, c, w, sortables)] for w in range(G.order))
    return PosetMorphism(source, target, mapping)


def fiber_is_interval(P: Poset, fiber: list[int]) -> bool:
    """Whether ``fiber`` equals the interval between its min and max in ``P``."""
    mask = sum(1 << x for x in fiber)
    lo = [x for x in fiber if P.down[x] & mask == 1 << x]
    hi = [x for x in fiber if P.up[x] & mask == 1 << x]
    if len(lo) != 1 or len(hi) != 1:
        return False
    return P.up[lo[0]] & P.down[hi[0]] == mask


def positive_root_bits(G: CoxeterGroup, w: int) -> list[int]:
    return list(bits(G.inversions[w]))
