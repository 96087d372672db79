"""Insertion-error detection and correction with a spread-backed LCP.

A codeword ``C`` (a member of the family ``C``) is sent; the network adds
a one-dimensional error space ``E`` and the receiver sees ``R = C + E``.
Any member ``D`` of the complementary family meeting ``R`` nontrivially
reveals the insertion, and the unique codeword contained in ``R`` is the
transmitted one.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from .code import SubspaceCode
from .construct import verify_spread
from .errors import (
    AmbientMismatch,
    BadErrorDimension,
    ChannelModelError,
    EnumerationTooLarge,
    MultipleCodewords,
    NoCodewordContained,
)
from .lcp import check_lcp
from .subspace import DEFAULT_CAP, Subspace, enumerate_vectors, projective_points, span

CASES = ("no_error", "error_in_D", "error_generic")


@dataclass(frozen=True)
class ChannelInstance:
    """Codebook ``C`` and detector family ``D`` that together form a k-spread
    of F_q^{2k}.  ``unsafe=True`` skips the spread and LCP validation."""

    C: SubspaceCode
    D: SubspaceCode
    unsafe: bool = False
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.C.field != self.D.field or self.C.n != self.D.n:
            raise AmbientMismatch("C and D must share field and ambient dimension")
        k = self.C.constant_dimension
        if k is None or self.D.constant_dimension != k:
            raise ValueError("C and D must have one common constant dimension k")
        if self.C.n != 2 * k:
            raise ValueError(f"ambient dimension {self.C.n} is not 2k = {2 * k}")
        if self.unsafe:
            return
        chk = verify_spread(self.C + self.D, self.cap)
        if not chk.valid:
            raise ValueError(f"C ∪ D is not a spread ({chk.failure})")
        if not check_lcp(self.C, self.D).verdict:
            raise ValueError("(C, D) is not an LCP")

    @property
    def field(self):
        return self.C.field

    @property
    def n(self) -> int:
        return self.C.n

    @property
    def k(self) -> int:
        return self.C.constant_dimension


def insert_error(C: Subspace, E: Subspace) -> Subspace:
    """Received space ``C + E`` for a one-dimensional insertion ``E``."""
    if E.dim != 1:
        raise BadErrorDimension(f"insertion must be one-dimensional, got {E.dim}")
    return C + E


class Detection(NamedTuple):
    detected: bool
    index: int | None
    intersection: Subspace | None
    hits: tuple[int, ...] = ()


def detect(R: Subspace, D: SubspaceCode, *, full_scan: bool = False) -> Detection:
    """Scan D in order; the first member meeting R nontrivially flags an insertion.

    With ``full_scan`` every intersecting member index is listed in ``hits``.
    """
    if R.n != D.n or R.field != D.field:
        raise AmbientMismatch("received space and detector family differ in ambient space")
    first = None
    hits = []
    for j, d in enumerate(D):
        inter = R & d
        if inter.dim:
            hits.append(j)
            if first is None:
                first = (j, inter)
            if not full_scan:
                break
    if first is None:
        return Detection(False, None, None, ())
    return Detection(True, first[0], first[1], tuple(hits))


@dataclass(frozen=True)
class DecodeResult:
    detected: bool
    recovered: Subspace | None
    error_estimate: Subspace | None
    case_tag: str
    recovered_index: int | None = None


def _lex_first_outside(R: Subspace, C: Subspace, cap: int) -> Subspace:
    for v in enumerate_vectors(R, cap):
        if not C.contains(v):
            return span([v], R.n, R.field)
    raise AssertionError("R equals C")


def correct(R: Subspace, instance: ChannelInstance) -> DecodeResult:
    """Recover the transmitted codeword from ``R = C + E``.

    ``error_in_D`` is reported when some detector member ``D`` meets R in a
    line that complements the recovered codeword; the line is then the
    error estimate.  Otherwise the estimate is the lexicographically first
    vector of R outside the codeword.
    """
    C, D, k = instance.C, instance.D, instance.k
    det = detect(R, D)
    if R.dim == k:
        if R in C.members:
            return DecodeResult(det.detected, R, None, "no_error", C.members.index(R))
        raise NoCodewordContained("received space of dimension k is not a codeword")
    if R.dim != k + 1:
        raise ChannelModelError(f"received dimension {R.dim} is not k or k + 1 (k = {k})")
    inside = [i for i, c in enumerate(C) if R.contains(c)]
    if not inside:
        raise NoCodewordContained("no codeword is contained in the received space")
    if len(inside) > 1:
        raise MultipleCodewords(f"codewords {inside} all lie in the received space")
    idx = inside[0]
    rec = C[idx]
    for d in D:
        line = R & d
        if line.dim == 1 and rec + line == R:
            return DecodeResult(det.detected, rec, line, "error_in_D", idx)
    est = _lex_first_outside(R, rec, instance.cap)
    return DecodeResult(det.detected, rec, est, "error_generic", idx)


# ----------------------------------------------------------------------------
# simulation


@dataclass(frozen=True)
class TrialOutcome:
    codeword: int
    error: tuple[int, ...]
    detected: bool
    recovered: bool
    case: str


@dataclass
class SimulationReport:
    mode: str
    seed: int | None
    trials: int
    parameters: dict[str, Any]
    detections: int = 0
    recoveries: int = 0
    failures: int = 0
    cases: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CASES})

    @property
    def recovery_rate(self) -> float | None:
        return self.recoveries / self.trials if self.trials else None

    @property
    def detection_rate(self) -> float | None:
        return self.detections / self.trials if self.trials else None

    def to_dict(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "parameters": dict(self.parameters),
            "detections": self.detections,
            "recoveries": self.recoveries,
            "failures": self.failures,
            "cases": dict(self.cases),
            "detection_rate": self.detection_rate,
            "recovery_rate": self.recovery_rate,
            "rate_defined": self.trials > 0,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in _flatten(self.to_dict()))


def _flatten(d: dict, prefix: str = ""):
    for k in sorted(d):
        v = d[k]
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        else:
            yield key, "undefined" if v is None and k.endswith("rate") else v


def run_trial(instance: ChannelInstance, c_index: int, error_vec) -> TrialOutcome:
    C = instance.C[c_index]
    E = span([error_vec], instance.n, instance.field)
    R = insert_error(C, E)
    try:
        res = correct(R, instance)
    except ChannelModelError:
        det = detect(R, instance.D)
        return TrialOutcome(c_index, tuple(int(x) for x in error_vec), det.detected, False, "failure")
    ok = res.recovered == C
    return TrialOutcome(c_index, tuple(int(x) for x in error_vec), res.detected, ok, res.case_tag)


def _random_trial(instance: ChannelInstance, seed: int, t: int) -> TrialOutcome:
    rng = np.random.default_rng([seed, t])
    c_index = int(rng.integers(len(instance.C)))
    while True:
        v = rng.integers(0, instance.field.q, size=instance.n)
        if v.any():
            return run_trial(instance, c_index, v)


def exhaustive_trials(instance: ChannelInstance, cap: int | None = None) -> list[tuple[int, np.ndarray]]:
    """Every (codeword index, error line) with the line outside the codeword."""
    cap = instance.cap if cap is None else cap
    if instance.field.q**instance.n > cap:
        raise EnumerationTooLarge(f"q^n = {instance.field.q ** instance.n} exceeds cap {cap}")
    lines = projective_points(instance.field, instance.n, cap)
    return [(i, v) for i, c in enumerate(instance.C) for v in lines if not c.contains(v)]


def simulate(
    instance: ChannelInstance,
    mode: str = "exhaustive",
    trials: int = 0,
    seed: int = 0,
    *,
    workers: int = 1,
    cap: int | None = None,
) -> SimulationReport:
    """Run insert -> detect -> correct over many transmissions.

    ``exhaustive`` covers every codeword with every error line not inside it
    (``trials`` is ignored).  ``random`` draws a codeword and a nonzero error
    vector per trial from a generator seeded by ``(seed, trial index)``, so
    the report does not depend on ``workers``.
    """
    if mode == "exhaustive":
        jobs = exhaustive_trials(instance, cap)
        fn = lambda job: run_trial(instance, job[0], job[1])  # noqa: E731
        seed_out = None
    elif mode == "random":
        if trials < 0:
            raise ValueError("trials must be non-negative")
        jobs = list(range(trials))
        fn = lambda t: _random_trial(instance, seed, t)  # noqa: E731
        seed_out = seed
    else:
        raise ValueError(f"unknown simulation mode {mode!r}")
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            outcomes = list(ex.map(fn, jobs))
    else:
        outcomes = [fn(j) for j in jobs]
    params = {
        "q": instance.field.q,
        "n": instance.n,
        "k": instance.k,
        "size_C": len(instance.C),
        "size_D": len(instance.D),
    }
    rep = SimulationReport(mode, seed_out, len(outcomes), params)
    counts = Counter(o.case for o in outcomes)
    rep.cases = {c: counts.get(c, 0) for c in CASES}
    rep.failures = counts.get("failure", 0)
    rep.detections = sum(o.detected for o in outcomes)
    rep.recoveries = sum(o.recovered for o in outcomes)
    return rep
