"""Per-record analysis drivers shared by the CLI and the test suite.

This is where a knot record is pushed through the whole pipeline:
correction vector, model vector, matching enumeration, verdict, and the
optional torsion/polynomial extraction.  Batch helpers process many
records with deterministic ordering, optionally across processes
(UNKNOT_THREADS).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from . import alexander as alexander_mod
from .catalog import KnotRecord
from .corrections import CorrectionVector, correction_vector
from .errors import MissingSignatureError, NonCyclicCokernelError, ValidationError
from .gamma import GammaVector, gamma_vector
from .matching import (
    Matching,
    Outcome,
    Verdict,
    enumerate_matchings,
    format_compact,
    obstruct,
    sign_refined_obstruct,
)

T = TypeVar("T")
U = TypeVar("U")


def thread_budget() -> int:
    raw = os.environ.get("UNKNOT_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"UNKNOT_THREADS must be an integer, got {raw!r}")
    return max(value, 1)


def ordered_map(fn: Callable[[T], U], items: Sequence[T]) -> list[U]:
    """Map preserving order; uses a process pool when UNKNOT_THREADS > 1."""
    workers = thread_budget()
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class RecordReport:
    """Everything the pipeline produced for one record."""

    name: str
    D: int
    verdict: Verdict
    A: Optional[CorrectionVector] = None
    B: Optional[GammaVector] = None
    matchings: tuple[Matching, ...] = ()
    invariant_factors: tuple[int, ...] = ()

    @property
    def outcome(self) -> Outcome:
        return self.verdict.outcome


def analyze_record(
    record: KnotRecord,
    strong: bool = False,
    generator: Optional[Sequence[int]] = None,
    generator_unit: Optional[int] = None,
) -> RecordReport:
    """Full unsigned pipeline for one record."""
    form = record.form
    try:
        A = correction_vector(form, generator=generator)
    except NonCyclicCokernelError as exc:
        return RecordReport(
            name=record.name,
            D=abs(form.det),
            verdict=Verdict(Outcome.NON_CYCLIC_H1, (), gate_applied=False),
            invariant_factors=exc.invariant_factors,
        )
    if generator_unit is not None:
        A = A.reindexed(generator_unit)
    if A.D == 1:
        return RecordReport(
            name=record.name,
            D=1,
            verdict=Verdict(Outcome.UNKNOT_DETERMINANT, (), gate_applied=False),
            A=A,
        )
    B = gamma_vector(A.D)
    matchings = enumerate_matchings(A, B)
    verdict = obstruct(A, B, strong=strong, matchings=matchings)
    return RecordReport(
        name=record.name, D=A.D, verdict=verdict, A=A, B=B, matchings=matchings
    )


@dataclass(frozen=True)
class SignedReport:
    """The sign-refined test for both crossing signs.

    ``negative_to_positive`` uses the record as stored; the other entry
    mirrors it.  Which geometric crossing sign each side names depends on
    the checkerboard orientation of the stored matrix, so consumers should
    lean on the pair, not on the labels.
    """

    name: str
    signature: int
    negative_to_positive: Verdict
    positive_to_negative: Verdict


def sign_refined_record(record: KnotRecord) -> SignedReport:
    if record.signature is None:
        raise MissingSignatureError(
            f"record {record.name!r} carries no signature; the signed test needs one"
        )
    A = correction_vector(record.form)
    if A.D == 1:
        trivial = Verdict(Outcome.UNKNOT_DETERMINANT, (), gate_applied=False)
        return SignedReport(record.name, record.signature, trivial, trivial)
    B = gamma_vector(A.D)
    neg = sign_refined_obstruct(A, B, record.signature)
    pos = sign_refined_obstruct(A.mirrored(), B, -record.signature)
    return SignedReport(
        name=record.name,
        signature=record.signature,
        negative_to_positive=neg,
        positive_to_negative=pos,
    )


@dataclass(frozen=True)
class AlexanderReport:
    name: str
    torsion: tuple[int, ...]
    polynomial: alexander_mod.AlexanderPolynomial
    coefficient_check: bool
    matching: Matching


def alexander_reports(record: KnotRecord) -> list[AlexanderReport]:
    """Torsion and polynomial for every surviving symmetric matching."""
    report = analyze_record(record)
    if report.B is None:
        return []
    out = []
    for m in report.matchings:
        if not (m.even and m.positive and m.symmetric and m.C[0] == 0):
            continue
        torsion = alexander_mod.torsion_from_matching(m, report.B)
        poly = alexander_mod.polynomial_from_torsion(torsion)
        out.append(
            AlexanderReport(
                name=record.name,
                torsion=torsion,
                polynomial=poly,
                coefficient_check=alexander_mod.lspace_coefficient_check(poly),
                matching=m,
            )
        )
    return out


# ---------------------------------------------------------------------------
# JSON rendering: fractions as exact "p/q" strings, never decimals.


def fraction_str(value: Fraction) -> str:
    return str(value)


def matching_to_json(m: Matching) -> dict:
    return {
        "unit": m.unit,
        "epsilon": m.epsilon,
        "provenance": [list(pair) for pair in m.provenance],
        "C": [fraction_str(c) for c in m.C],
        "compact": format_compact(m),
        "flags": {
            "even": m.even,
            "positive": m.positive,
            "symmetric": m.symmetric,
            "staircase": m.staircase,
        },
    }


def verdict_to_json(v: Verdict) -> dict:
    return {
        "outcome": v.outcome.value,
        "obstructed": v.outcome.obstructed,
        "gate_applied": v.gate_applied,
        "strong": v.strong,
        "witnesses": [matching_to_json(m) for m in v.witnesses],
        **({"detail": v.detail} if v.detail else {}),
    }


def report_to_json(report: RecordReport, include_matchings: bool = True) -> dict:
    out: dict = {
        "knot": report.name,
        "D": report.D,
        "verdict": report.verdict.outcome.value,
        "obstructed": report.verdict.outcome.obstructed,
        "gate_applied": report.verdict.gate_applied,
    }
    if report.invariant_factors:
        out["invariant_factors"] = list(report.invariant_factors)
    if report.A is not None:
        out["A"] = [fraction_str(a) for a in report.A.values]
        out["generator"] = list(report.A.generator)
    if report.B is not None:
        out["B"] = [fraction_str(b) for b in report.B.values]
    if include_matchings:
        out["matchings"] = [matching_to_json(m) for m in report.matchings]
    out["witnesses"] = [format_compact(m) for m in report.verdict.witnesses]
    return out


def _analyze_for_pool(args: tuple[dict, bool]) -> dict:
    """Pool worker: analysis errors become summary entries, not crashes."""
    from .catalog import record_from_dict
    from .errors import UnknotOneError

    entry, strong = args
    try:
        record = record_from_dict(entry)
        return report_to_json(analyze_record(record, strong=strong), include_matchings=False)
    except UnknotOneError as exc:
        return {"knot": entry.get("name", "?"), "error": str(exc)}


def batch_reports(records: Iterable[KnotRecord], strong: bool = False) -> list[dict]:
    """Analyse records in input order; parallel across processes if asked."""
    from .catalog import record_to_dict

    payload = [(record_to_dict(r), strong) for r in records]
    return ordered_map(_analyze_for_pool, payload)
