"""The expected-verdict matrix: every family the package builds, with what it must yield."""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .coxeter import build_group, cambrian, parse_type, pi_down_morphism, weak_order
from .fixtures import STOKES
from .graphs import cycle_with_pendants, underlying_graph
from .poset import Poset, cube, induced_subposet
from .reptype import (
    FINITE,
    TAME,
    WILD_VERDICT,
    Certificate,
    classify,
    contraction_cert,
    four_regular_cert,
    hereditary_wild_cert,
    validate_certificate,
)
from .rootposets import find_beta_certificate, nonnesting, nonnesting_rank3_wild_subset

# cycle length of the recorded hereditary witness in each rank-3 Cambrian lattice
CAMBRIAN_CYCLE = {"A3": 8, "B3": 10, "H3": 13}
STOKES_SQUARE = {"cycle": [1, 2, 3, 5, 7, 8, 10, 11], "omega": 0, "square": [0, 2, 10, 7]}


@dataclass
class Row:
    name: str
    build: Callable[[], Poset]
    verdict: str
    size: int | None = None
    variant: str | None = None
    witness_size: int | None = None
    # optional dedicated search; classify() is always run as well
    certify: Callable[[Poset, int], Certificate | None] | None = None
    extra: dict = field(default_factory=dict)


@dataclass
class RowResult:
    index: int
    name: str
    ok: bool
    verdict: str
    variant: str | None
    witness_size: int | None
    size: int
    seconds: float
    problems: list[str]

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        var = self.variant or "-"
        wit = "-" if self.witness_size is None else str(self.witness_size)
        out = f"{status} {self.name:34s} n={self.size:<4d} {self.verdict:8s} {var:18s} w={wit:<3s} {self.seconds:6.2f}s"
        if self.problems:
            out += "  [" + "; ".join(self.problems) + "]"
        return out


def _cambrian(t: str, c) -> Callable[[], Poset]:
    return lambda: cambrian(build_group(parse_type(t)), c)


def _hereditary(length: int):
    return lambda P, seed: hereditary_wild_cert(P, seed=seed, cycle_lengths=[length])


def _beta_cert(t: str):
    def certify(P: Poset, seed: int) -> Certificate | None:
        lat = nonnesting(t)
        cert = find_beta_certificate(lat.roots)
        if cert is None:
            return None
        S = nonnesting_rank3_wild_subset(lat, cert)
        return Certificate("HereditaryWild", WILD_VERDICT, S, data={"method": "beta"})
    return certify


def _stokes_cert(P: Poset, seed: int) -> Certificate:
    return Certificate("SquareCycle", WILD_VERDICT, STOKES_SQUARE["cycle"] + [STOKES_SQUARE["omega"]],
                       data=dict(STOKES_SQUARE))


def _contraction(t: str):
    def certify(P: Poset, seed: int) -> Certificate | None:
        G = build_group(parse_type(t))
        f = pi_down_morphism(G, G.coxeter_elements()[0])
        target = hereditary_wild_cert(f.target, seed=seed, cycle_lengths=[CAMBRIAN_CYCLE[t]])
        return contraction_cert(f, target)
    return certify


def verification_matrix() -> list[Row]:
    rows: list[Row] = [Row("cambrian A1 c=1", _cambrian("A1", (1,)), FINITE, 2, "FiniteHereditary")]
    for h in range(3, 10):
        for c in ((1, 2), (2, 1)):
            rows.append(Row(f"cambrian I2({h}) c={c[0]},{c[1]}", _cambrian(f"I2({h})", c), FINITE,
                            h + 2, "FiniteViaFlipFlop", extra={"shape": f"D{h + 2}"}))
    for t, n in (("A1", 2), ("A2", 5), ("B2", 6), ("C2", 6), ("A1xA1", 4)):
        rows.append(Row(f"nonnesting {t}", lambda t=t: nonnesting(t).poset, FINITE, n))
    rows.append(Row("cube 3", lambda: cube(3), TAME, 8, "TameCube", 6))
    rows.append(Row("cambrian A1xA1xA1 c=1,2,3", _cambrian("A1xA1xA1", (1, 2, 3)), TAME, 8, "TameCube", 6))
    rows.append(Row("nonnesting A1xA1xA1", lambda: nonnesting("A1xA1xA1").poset, TAME, 8, "TameCube", 6))
    for h in (3, 4, 5):
        t = f"A1xI2({h})"
        for c in build_group(parse_type(t)).coxeter_elements():
            rows.append(Row(f"cambrian {t} c={','.join(map(str, c))}", _cambrian(t, c), WILD_VERDICT,
                            None, "SquareCycle"))
    for t, size in (("A3", 14), ("B3", 20), ("H3", 32)):
        L = CAMBRIAN_CYCLE[t]
        for c in build_group(parse_type(t)).coxeter_elements():
            rows.append(Row(f"cambrian {t} c={','.join(map(str, c))}", _cambrian(t, c), WILD_VERDICT,
                            size, "HereditaryWild", L + 1, _hereditary(L), {"cycle_length": L}))
    for t, size in (("A3", 14), ("B3", 20), ("C3", 20)):
        rows.append(Row(f"nonnesting {t}", lambda t=t: nonnesting(t).poset, WILD_VERDICT, size,
                        "HereditaryWild", 7, _beta_cert(t), {"cycle_length": 6}))
    rows.append(Row("cube 4", lambda: cube(4), WILD_VERDICT, 16, "FourRegular", 7,
                    lambda P, s: four_regular_cert(P), {"case": 2}))
    rows.append(Row("cambrian A4 c=1,2,3,4", _cambrian("A4", (1, 2, 3, 4)), WILD_VERDICT, 42,
                    "FourRegular", None, lambda P, s: four_regular_cert(P)))
    rows.append(Row("stokes-fixture", STOKES.poset, WILD_VERDICT, 12, "SquareCycle", 9, _stokes_cert))
    for t, size in (("A1xA1", 4), ("A2", 6)):
        rows.append(Row(f"weak-order {t}", lambda t=t: weak_order(build_group(parse_type(t))), FINITE, size))
    for h in (4, 5, 6):
        rows.append(Row(f"weak-order I2({h})", lambda h=h: weak_order(build_group(parse_type(f"I2({h})"))),
                        FINITE, 2 * h, "CitedFinite"))
    for t, size in (("A3", 24), ("B3", 48), ("H3", 120)):
        rows.append(Row(f"weak-order {t}", lambda t=t: weak_order(build_group(parse_type(t))), WILD_VERDICT,
                        size, "Contraction", None, _contraction(t)))
    return rows


def run_row(index: int, row: Row, seed: int = 0) -> RowResult:
    t0 = time.perf_counter()
    problems: list[str] = []
    P = row.build()
    report = classify(P, seed=seed, with_polynomial=False)
    cert = report.certificate
    if row.certify is not None:
        try:
            cert = row.certify(P, seed)
        except ValueError as exc:
            cert = None
            problems.append(f"certificate construction failed: {exc}")
        if cert is None:
            problems.append("dedicated search found no certificate")
        elif cert.verdict != report.verdict:
            problems.append(f"classify says {report.verdict}, dedicated certificate says {cert.verdict}")
    verdict = cert.verdict if cert is not None else report.verdict
    if cert is not None:
        valid, why = validate_certificate(P, cert)
        if not valid:
            problems.append(f"certificate rejected: {why}")
    if verdict != row.verdict:
        problems.append(f"expected {row.verdict}")
    if row.size is not None and P.n != row.size:
        problems.append(f"expected {row.size} elements")
    variant = cert.variant if cert else None
    if row.variant is not None and variant != row.variant:
        problems.append(f"expected variant {row.variant}")
    wsize = len(cert.witness) if cert and cert.witness else None
    if row.witness_size is not None and wsize != row.witness_size:
        problems.append(f"expected witness of size {row.witness_size}")
    if cert is not None:
        for key, want in row.extra.items():
            got = cert.data.get(key)
            if key == "cycle_length" and got is None and cert.witness:
                shape = cycle_with_pendants(underlying_graph(induced_subposet(P, cert.witness)))
                got = shape[0] if shape else None
            if got != want:
                problems.append(f"expected {key}={want}, got {got}")
    return RowResult(index, row.name, not problems, verdict, variant, wsize, P.n,
                     time.perf_counter() - t0, problems)


def run_matrix(rows: list[Row] | None = None, seed: int = 0, workers: int = 2) -> list[RowResult]:
    """Run every row on a bounded thread pool; results come back in row order."""
    rows = verification_matrix() if rows is None else rows
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(run_row, i, r, seed) for i, r in enumerate(rows)]
        return [f.result() for f in futures]
