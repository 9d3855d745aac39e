"""Positive root posets, their order-ideal lattices, and the beta pattern.

Roots are integer vectors in the simple-root basis, ordered by
``alpha <= beta`` iff ``beta - alpha`` has nonnegative coordinates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .coxeter import CoxeterType, UnsupportedType, parse_type
from .poset import (
    Poset,
    from_json,
    from_order,
    ideal_generators,
    order_ideals,
    ideals_poset,
)


def _interval(n: int, pieces: list[tuple[int, int, int]]) -> tuple[int, ...]:
    """Vector with coefficient ``c`` on simple roots ``lo..hi`` (1-based, inclusive)."""
    v = [0] * n
    for lo, hi, c in pieces:
        for k in range(lo, hi + 1):
            v[k - 1] += c
    return tuple(v)


def positive_roots(family: str, n: int) -> list[tuple[int, ...]]:
    """Explicit positive roots of A_n, B_n (short alpha_n) or C_n (long alpha_n)."""
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 2 if family == "A" else n + 1):
            roots.append(_interval(n, [(i, j - 1, 1)]))  # e_i - e_j
    if family == "B":
        for i in range(1, n + 1):
            roots.append(_interval(n, [(i, n, 1)]))  # e_i
            for j in range(i + 1, n + 1):
                roots.append(_interval(n, [(i, j - 1, 1), (j, n, 2)]))  # e_i + e_j
    elif family == "C":
        for i in range(1, n + 1):
            roots.append(_interval(n, [(i, n - 1, 2), (n, n, 1)]))  # 2 e_i
            for j in range(i + 1, n + 1):
                roots.append(_interval(n, [(i, j - 1, 1), (j, n - 1, 2), (n, n, 1)]))
    elif family != "A":
        raise UnsupportedType(f"no integer root system for family {family}")
    return sorted(set(roots), key=lambda v: (sum(v), tuple(-c for c in v)))


def root_label(v: tuple[int, ...]) -> str:
    terms = []
    for i, c in enumerate(v, start=1):
        if c:
            terms.append(f"a{i}" if c == 1 else f"{c}a{i}")
    return "+".join(terms)


@dataclass(frozen=True)
class RootPoset:
    poset: Poset
    simples: tuple[int, ...]
    vectors: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.simples)

    def to_json(self) -> dict:
        out = self.poset.to_json()
        out["simples"] = list(self.simples)
        return out


def root_poset(t: CoxeterType | str) -> RootPoset:
    if isinstance(t, str):
        t = parse_type(t)
    vectors: list[tuple[int, ...]] = []
    total = t.rank
    offset = 0
    for f in t.factors:
        if f.family not in "ABC":
            raise UnsupportedType(f"{f} is not crystallographic of type A/B/C; load a fixture instead")
        for v in positive_roots(f.family, f.rank):
            vectors.append((0,) * offset + v + (0,) * (total - offset - f.rank))
        offset += f.rank
    vectors.sort(key=lambda v: (sum(v), tuple(-c for c in v)))
    labels = [root_label(v) for v in vectors]
    P = from_order(labels, lambda i, j: all(b >= a for a, b in zip(vectors[i], vectors[j])))
    simples = tuple(vectors.index(tuple(int(k == i) for k in range(total))) for i in range(total))
    return RootPoset(P, simples, tuple(vectors))


def load_root_poset_fixture(data: dict | str) -> RootPoset:
    """Wrap user-supplied poset JSON with designated ``simples``."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "simples" not in data:
        raise ValueError("root poset fixture needs 'labels', 'covers' and 'simples'")
    P = from_json(data)
    simples = tuple(int(s) for s in data["simples"])
    if len(set(simples)) != len(simples) or any(not 0 <= s < P.n for s in simples):
        raise ValueError("bad simple indices in fixture")
    if sorted(simples) != P.minimal_elements():
        raise ValueError(f"simples {list(simples)} are not exactly the minimal elements "
                         f"{P.minimal_elements()}")
    return RootPoset(P, simples)


@dataclass(frozen=True)
class IdealLattice:
    """Order ideals of a root poset; ``ideals[k]`` is the bitmask of lattice element k."""

    roots: RootPoset
    poset: Poset
    ideals: tuple[int, ...]

    def ideal_of(self, generators) -> int:
        """Lattice element ``L(S)`` for an antichain of root indices ``S``."""
        mask = 0
        for x in generators:
            mask |= self.roots.poset.down[x]
        return self.ideals.index(mask)

    def generators(self, k: int) -> list[int]:
        return ideal_generators(self.roots.poset, self.ideals[k])


def nonnesting(t: CoxeterType | str | RootPoset) -> IdealLattice:
    rp = t if isinstance(t, RootPoset) else root_poset(t)
    ideals = order_ideals(rp.poset)
    return IdealLattice(rp, ideals_poset(rp.poset, ideals), tuple(ideals))


def beta_candidates(rp: RootPoset) -> list[tuple[int, int, int, bool]]:
    """Every root covering two simples, with whether it covers *only* those two."""
    P = rp.poset
    simple = set(rp.simples)
    out = []
    for beta in range(P.n):
        low = P.lower_covers[beta]
        hits = [s for s in rp.simples if s in low]
        if len(hits) >= 2:
            a1, a2 = hits[0], hits[1]
            exact = set(low) == {a1, a2} and len(hits) == 2 and set(low) <= simple
            out.append((a1, a2, beta, exact))
    return out


def find_beta_certificate(rp: RootPoset) -> tuple[int, int, int] | None:
    """Two simple roots and a root covering exactly those two, if any."""
    for a1, a2, beta, exact in beta_candidates(rp):
        if exact:
            return a1, a2, beta
    return None


def nonnesting_rank3_wild_subset(lat: IdealLattice, cert: tuple[int, int, int]) -> list[int]:
    """Lattice elements L(a_i), L(a_i, a_j) and L(beta) for a rank-3 root poset."""
    rp = lat.roots
    if rp.rank != 3:
        raise ValueError("the beta construction needs rank 3")
    a1, a2, beta = cert
    (a3,) = [s for s in rp.simples if s not in (a1, a2)]
    try:
        return [lat.ideal_of([a1]), lat.ideal_of([a2]), lat.ideal_of([a3]),
                lat.ideal_of([a1, a2]), lat.ideal_of([a1, a3]), lat.ideal_of([a2, a3]),
                lat.ideal_of([beta])]
    except ValueError as exc:
        raise ValueError("ideal lattice is missing an expected element") from exc


def cube_part(lat: IdealLattice) -> list[int]:
    """Lattice elements for ideals contained in ``L(a_1, ..., a_n)``."""
    top = 0
    for s in lat.roots.simples:
        top |= 1 << s
    return [k for k, m in enumerate(lat.ideals) if m & ~top == 0]

