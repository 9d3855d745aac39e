"""Built-in posets with marked subsets, used as regression data.

Element ``k`` of each fixture carries the label ``str(k)``.  ``marked`` is the
recorded wild witness; ``extra`` is the vertex whose removal leaves the cycle
(or ``None`` when the witness is a single block).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .poset import Poset, from_covers


@dataclass(frozen=True)
class Fixture:
    name: str
    n: int
    covers: tuple[tuple[int, int], ...]
    marked: tuple[int, ...] = ()
    extra: int | None = None
    meta: dict = field(default_factory=dict)

    def poset(self) -> Poset:
        return from_covers([str(k) for k in range(self.n)], self.covers)

    def to_json(self) -> dict:
        out = self.poset().to_json()
        out["name"] = self.name
        out["marked"] = list(self.marked)
        if self.extra is not None:
            out["extra"] = self.extra
        out.update(self.meta)
        return out


def _fx(name, n, covers, marked=(), extra=None, **meta) -> Fixture:
    return Fixture(name, n, tuple(tuple(e) for e in covers), tuple(sorted(marked)), extra, meta)


STOKES = _fx(
    "stokes", 12,
    [(9, 0), (9, 3), (9, 8), (0, 2), (0, 10), (3, 10), (3, 5), (8, 1), (8, 11), (2, 1), (2, 7),
     (10, 7), (11, 5), (11, 6), (1, 6), (5, 4), (6, 4), (7, 4)],
    marked=[0, 1, 2, 3, 5, 7, 8, 10, 11], omega=0, square=[0, 2, 10, 7])

CAMBRIAN_A1_I2_4 = _fx(
    "cambrian-A1xI2(4)", 12,
    [(0, 1), (0, 2), (0, 3), (1, 4), (1, 9), (2, 4), (2, 5), (3, 5), (3, 6), (4, 11), (5, 7),
     (6, 7), (6, 8), (7, 10), (8, 9), (8, 10), (9, 11), (10, 11)],
    marked=range(1, 10), type="A1xI2(4)")

CAMBRIAN_A3_1 = _fx(
    "cambrian-A3-1", 14,
    [(0, 1), (0, 4), (0, 10), (1, 3), (1, 5), (2, 6), (2, 11), (3, 13), (4, 5), (4, 7), (5, 11),
     (6, 9), (7, 2), (7, 12), (8, 3), (8, 9), (9, 13), (10, 8), (10, 12), (11, 13), (12, 6)],
    marked=[1, 3, 4, 5, 7, 8, 10, 12, 2], extra=2, type="A3")

CAMBRIAN_A3_2 = _fx(
    "cambrian-A3-2", 14,
    [(0, 5), (0, 6), (0, 7), (1, 12), (2, 12), (3, 2), (4, 2), (5, 9), (5, 13), (6, 1), (6, 11),
     (7, 8), (7, 13), (8, 4), (8, 11), (9, 1), (9, 3), (10, 3), (10, 4), (11, 12), (13, 10)],
    marked=[1, 3, 4, 6, 8, 9, 10, 11, 13], extra=13, type="A3")

CAMBRIAN_B3_1 = _fx(
    "cambrian-B3-1", 20,
    [(0, 3), (0, 16), (1, 5), (1, 9), (2, 6), (2, 11), (3, 10), (4, 12), (5, 17), (6, 17), (7, 6),
     (7, 12), (8, 3), (8, 19), (9, 4), (10, 15), (11, 5), (12, 17), (13, 4), (14, 0), (14, 2),
     (14, 18), (15, 9), (15, 13), (16, 7), (16, 13), (18, 8), (18, 11), (19, 1), (19, 10)],
    marked=[1, 2, 5, 6, 7, 9, 11, 13, 15, 16, 10], extra=10, type="B3")

CAMBRIAN_B3_2 = _fx(
    "cambrian-B3-2", 20,
    [(0, 3), (0, 10), (1, 12), (2, 0), (2, 14), (3, 13), (4, 17), (5, 16), (6, 12), (7, 1), (7, 6),
     (8, 4), (8, 16), (9, 5), (9, 13), (10, 4), (10, 6), (11, 2), (11, 7), (11, 18), (13, 8),
     (14, 19), (15, 1), (15, 5), (16, 17), (17, 12), (18, 14), (18, 15), (19, 3), (19, 9)],
    marked=[0, 1, 3, 5, 6, 7, 9, 10, 13, 15, 8], extra=8, type="B3")

CAMBRIAN_H3_1 = _fx(
    "cambrian-H3-1", 32,
    [(0, 1), (1, 26), (2, 0), (2, 3), (3, 1), (3, 22), (4, 9), (4, 27), (5, 28), (6, 9), (7, 12),
     (8, 17), (9, 8), (10, 13), (10, 16), (11, 6), (11, 28), (12, 2), (13, 30), (14, 17), (14, 29),
     (15, 10), (15, 23), (15, 31), (16, 7), (16, 20), (17, 25), (18, 6), (18, 30), (19, 14),
     (19, 27), (20, 12), (20, 24), (21, 19), (21, 22), (22, 5), (23, 13), (23, 29), (24, 0),
     (24, 18), (26, 5), (26, 11), (27, 8), (28, 4), (29, 25), (30, 25), (31, 7), (31, 21)],
    marked=[0, 1, 3, 13, 14, 18, 19, 21, 22, 23, 24, 29, 30, 26], extra=26, type="H3")

CAMBRIAN_H3_2 = _fx(
    "cambrian-H3-2", 32,
    [(0, 22), (1, 5), (1, 13), (2, 6), (3, 19), (4, 7), (5, 24), (5, 29), (6, 25), (7, 11), (7, 30),
     (8, 0), (8, 1), (9, 2), (9, 20), (10, 21), (11, 18), (11, 24), (12, 25), (13, 4), (14, 3),
     (14, 12), (15, 12), (15, 27), (16, 0), (16, 14), (17, 8), (17, 15), (17, 16), (18, 28),
     (19, 20), (20, 6), (21, 9), (22, 13), (22, 26), (23, 3), (23, 30), (24, 10), (26, 4), (26, 23),
     (27, 25), (28, 10), (28, 31), (29, 2), (29, 27), (30, 18), (31, 19), (31, 21)],
    marked=[3, 5, 7, 11, 12, 14, 15, 23, 24, 27, 29, 30, 4], extra=4, type="H3")

NONNESTING_A3 = _fx(
    "nonnesting-A3", 14,
    [(0, 1), (0, 2), (0, 6), (1, 3), (1, 8), (2, 3), (2, 7), (3, 4), (3, 5), (4, 10), (4, 11),
     (5, 11), (6, 7), (6, 8), (7, 4), (8, 4), (8, 9), (9, 10), (10, 12), (11, 12), (12, 13)],
    marked=[1, 2, 3, 5, 6, 7, 8], type="A3")

FIXTURES = {f.name: f for f in (
    STOKES, CAMBRIAN_A1_I2_4, CAMBRIAN_A3_1, CAMBRIAN_A3_2, CAMBRIAN_B3_1, CAMBRIAN_B3_2,
    CAMBRIAN_H3_1, CAMBRIAN_H3_2, NONNESTING_A3)}


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
