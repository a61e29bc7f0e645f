r"""
Exhaustive and sampled scans over all concept classes of a small domain.

A class over [n] is identified by an index whose binary expansion is its characteristic vector:
bit j of the index is set iff concept j (in lexicographic order) belongs to the class. The nonempty
classes are the indices :math:`1, \ldots, 2^{2^n} - 1`. Work is cut into fixed chunks of consecutive
units, so totals do not depend on how many workers run the chunks, and a scan can stop after any chunk
and resume from its checkpoint.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from vcradon.classes import ConceptClass, is_extremal, is_maximum, write_class
from .report import CHECKS, CheckResult, Report, check_bounds

logger = logging.getLogger(__name__)

FILTERS = ("all", "extremal", "maximum")
MAX_EXHAUSTIVE_N = 4
MAX_SAMPLED_N = 6


def class_from_index(index: int, n: int) -> ConceptClass:
    r"""
    The class whose characteristic vector over the :math:`2^n` concepts is the binary expansion of index.
    """
    if not 0 <= index < (1 << (1 << n)):
        raise ValueError(f"Index {index} does not describe a class over a domain of size {n}.")
    return ConceptClass(n, (j for j in range(1 << n) if (index >> j) & 1))


def index_of_class(C: ConceptClass) -> int:
    index = 0
    for c in C.concepts:
        index |= 1 << c
    return index


def accepts(C: ConceptClass, filter: str) -> bool:
    if filter == "all":
        return True
    if filter == "extremal":
        return is_extremal(C)
    if filter == "maximum":
        return is_maximum(C)
    raise ValueError(f"Unknown filter '{filter}', expected one of {FILTERS}.")


def sample_index(rng: np.random.Generator, n: int, max_size: int | None = None) -> int:
    r"""
    Draw a nonempty class: uniformly among all of them, or, with max_size, by first drawing its size
    uniformly in [1, max_size] and then that many distinct concepts.
    """
    m = 1 << n
    if max_size is not None:
        k = int(rng.integers(1, min(max_size, m) + 1))
        chosen = rng.choice(m, size=k, replace=False)
        return sum(1 << int(j) for j in chosen)
    while True:
        bits = rng.integers(0, 2, size=m)
        index = sum(1 << int(j) for j in np.flatnonzero(bits))
        if index:
            return index


@dataclass
class ScanSummary:
    r"""
    Aggregated outcome of a scan. Merging is associative and commutative.

    Attributes:
        visited: classes looked at
        matched: classes passing the filter (and checked)
        extremal: matched classes that are extremal
        maximum: matched classes that are maximum
        tallies: check name -> result -> count
        refutations: one record per refuting class, sorted by index
        complete: whether every unit of the scan was processed
    """

    visited: int = 0
    matched: int = 0
    extremal: int = 0
    maximum: int = 0
    tallies: Dict[str, Dict[str, int]] = field(default_factory=dict)
    refutations: List[dict] = field(default_factory=list)
    complete: bool = False

    def add(self, index: int, report: Report):
        self.matched += 1
        self.extremal += int(report.extremal)
        self.maximum += int(report.maximum)
        for name in CHECKS:
            row = self.tallies.setdefault(name, {})
            key = str(report.checks[name])
            row[key] = row.get(key, 0) + 1
        if report.refutations:
            self.refutations.append(
                {"index": index, "checks": report.refutations, "concepts": list(report_concepts(index, report.n))}
            )

    def merge(self, other: ScanSummary) -> ScanSummary:
        tallies = {k: dict(v) for k, v in self.tallies.items()}
        for name, row in other.tallies.items():
            mine = tallies.setdefault(name, {})
            for key, count in row.items():
                mine[key] = mine.get(key, 0) + count
        return ScanSummary(
            visited=self.visited + other.visited,
            matched=self.matched + other.matched,
            extremal=self.extremal + other.extremal,
            maximum=self.maximum + other.maximum,
            tallies=tallies,
            refutations=sorted(self.refutations + other.refutations, key=lambda r: r["index"]),
            complete=self.complete and other.complete,
        )

    @property
    def failures(self) -> int:
        return sum(row.get(str(CheckResult.FAIL), 0) for row in self.tallies.values())

    def to_dict(self) -> dict:
        return {
            "visited": self.visited,
            "matched": self.matched,
            "extremal": self.extremal,
            "maximum": self.maximum,
            "tallies": {k: dict(sorted(v.items())) for k, v in sorted(self.tallies.items())},
            "refutations": self.refutations,
            "complete": self.complete,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ScanSummary:
        return cls(
            visited=int(data["visited"]),
            matched=int(data["matched"]),
            extremal=int(data["extremal"]),
            maximum=int(data["maximum"]),
            tallies={k: {r: int(c) for r, c in v.items()} for k, v in data["tallies"].items()},
            refutations=list(data["refutations"]),
            complete=bool(data["complete"]),
        )

    def format_table(self) -> str:
        lines = [
            f"visited   {self.visited}",
            f"matched   {self.matched}",
            f"extremal  {self.extremal}",
            f"maximum   {self.maximum}",
            f"complete  {self.complete}",
        ]
        width = max(len(c) for c in CHECKS)
        for name in CHECKS:
            row = self.tallies.get(name, {})
            counts = "  ".join(f"{str(r)}={row.get(str(r), 0)}" for r in CheckResult)
            lines.append(f"{name:<{width}}  {counts}")
        lines.append(f"refutations  {len(self.refutations)}")
        return "\n".join(lines) + "\n"


def report_concepts(index: int, n: int) -> List[str]:
    return class_from_index(index, n).to_strings()


@dataclass(frozen=True)
class _Chunk:
    n: int
    filter: str
    mode: str
    seed: Optional[int]
    chunk: int
    start: int
    stop: int
    radon_limit: Optional[int]
    max_size: Optional[int]
    keep_reports: bool = False


def _unit_indices(job: _Chunk) -> Iterator[int]:
    if job.mode == "exhaustive":
        yield from range(job.start + 1, job.stop + 1)
        return
    rng = np.random.default_rng([job.seed, job.chunk])
    for _ in range(job.start, job.stop):
        yield sample_index(rng, job.n, job.max_size)


def _run_chunk(job: _Chunk) -> Tuple[ScanSummary, List[dict]]:
    summary = ScanSummary(complete=True)
    records = []
    for index in _unit_indices(job):
        summary.visited += 1
        C = class_from_index(index, job.n)
        if not accepts(C, job.filter):
            continue
        report = check_bounds(C, source=f"index {index}", radon_limit=job.radon_limit)
        summary.add(index, report)
        if job.keep_reports:
            records.append(report.to_record())
    return summary, records


def enumerate_classes(
    n: int,
    filter: str = "all",
    checker: Callable[..., Report] = check_bounds,
    sample: int | None = None,
    seed: int | None = None,
    max_size: int | None = None,
) -> Iterator[Report]:
    r"""
    Visit every nonempty class over [n] once (or a seeded sample of them) and yield the checker's report
    for each class passing the filter.

    Args:
        n: domain size, at most 4 for exhaustive runs and 6 for sampling
        filter: 'all', 'extremal' or 'maximum'
        checker: called as checker(C, source) for every accepted class
        sample: number of classes to draw instead of the exhaustive walk
        seed: seed for sampling, required with sample
        max_size: optional cap on the size of sampled classes
    """
    _validate(n, filter, sample, seed)
    if sample is None:
        indices = range(1, 1 << (1 << n))
    else:
        rng = np.random.default_rng(seed)
        indices = (sample_index(rng, n, max_size) for _ in range(sample))
    for index in indices:
        C = class_from_index(index, n)
        if accepts(C, filter):
            yield checker(C, f"index {index}")


def _validate(n: int, filter: str, sample: int | None, seed: int | None):
    if filter not in FILTERS:
        raise ValueError(f"Unknown filter '{filter}', expected one of {FILTERS}.")
    if n < 1:
        raise ValueError(f"n should be at least 1, got {n}.")
    if sample is None:
        if n > MAX_EXHAUSTIVE_N:
            raise ValueError(f"Exhaustive scans support n <= {MAX_EXHAUSTIVE_N}; use sampling for n = {n}.")
    else:
        if n > MAX_SAMPLED_N:
            raise ValueError(f"Sampled scans support n <= {MAX_SAMPLED_N}, got n = {n}.")
        if seed is None:
            raise ValueError("Sampling needs a seed.")
        if sample < 1:
            raise ValueError(f"Sample size should be positive, got {sample}.")


class Scan:
    r"""
    A resumable, parallel scan over classes.

    Attributes:
        n: domain size
        filter: 'all', 'extremal' or 'maximum'
        sample: number of sampled classes, None for the exhaustive walk
        seed: sampling seed
        workers: number of worker processes; 1 runs in-process
        chunk_size: units per chunk
        checkpoint: JSON file holding the progress, written after every chunk
        limit: stop after this many units in one call of run
        radon_limit: forwarded to check_bounds
        max_size: cap on the size of sampled classes
        dump_dir: where refuting classes are written, default the checkpoint directory or the working directory
        on_report: called with the record of every checked class, in unit order, for the units run by this
            call of run
    """

    def __init__(
        self,
        n: int,
        filter: str = "all",
        sample: int | None = None,
        seed: int | None = None,
        workers: int = 1,
        chunk_size: int | None = None,
        checkpoint: Union[str, Path, None] = None,
        limit: int | None = None,
        radon_limit: int | None = None,
        max_size: int | None = None,
        dump_dir: Union[str, Path, None] = None,
        on_report: Optional[Callable[[dict], None]] = None,
    ):
        _validate(n, filter, sample, seed)
        self.n = n
        self.filter = filter
        self.sample = sample
        self.seed = seed
        self.mode = "exhaustive" if sample is None else "sample"
        self.total = (1 << (1 << n)) - 1 if sample is None else sample
        self.workers = max(1, int(workers))
        self.chunk_size = chunk_size or (4096 if sample is None else 64)
        self.checkpoint = Path(checkpoint) if checkpoint else None
        self.limit = limit
        self.radon_limit = radon_limit
        self.max_size = max_size
        if dump_dir is None:
            dump_dir = self.checkpoint.parent if self.checkpoint else Path(".")
        self.dump_dir = Path(dump_dir)
        self.on_report = on_report

    def _params(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "seed": self.seed,
            "filter": self.filter,
            "sample": self.sample,
            "max_size": self.max_size,
            "chunk_size": self.chunk_size,
            "radon_limit": self.radon_limit,
        }

    def _load(self):
        with open(self.checkpoint, "r") as f:
            data = json.load(f)
        params = self._params()
        mismatched = [k for k in params if data.get(k) != params[k]]
        if mismatched:
            raise ValueError(f"Checkpoint {self.checkpoint} was written with different {', '.join(mismatched)}.")
        return int(data["next_index"]), ScanSummary.from_dict(data["totals"])

    def _save(self, next_unit: int, totals: ScanSummary):
        if self.checkpoint is None:
            return
        data = dict(self._params(), next_index=next_unit, totals=totals.to_dict())
        data["totals"]["complete"] = next_unit >= self.total
        tmp = self.checkpoint.with_name(self.checkpoint.name + ".tmp")
        with open(tmp, "w") as f:
            json.dump(data, f, indent=1)
        os.replace(tmp, self.checkpoint)

    def _dump(self, refutation: dict):
        C = class_from_index(refutation["index"], self.n)
        path = self.dump_dir / f"refutation-{refutation['index']}.txt"
        write_class(C, path, header=f"refutes {', '.join(refutation['checks'])}")
        logger.error("class %d refutes %s, written to %s", refutation["index"], refutation["checks"], path)

    def _jobs(self, start: int, stop: int) -> List[_Chunk]:
        jobs = []
        for chunk in range(start // self.chunk_size, -(-stop // self.chunk_size)):
            lo = max(chunk * self.chunk_size, start)
            hi = min((chunk + 1) * self.chunk_size, stop)
            jobs.append(
                _Chunk(
                    self.n, self.filter, self.mode, self.seed, chunk, lo, hi, self.radon_limit, self.max_size,
                    keep_reports=self.on_report is not None,
                )
            )
        return jobs

    def run(self, resume: bool = False) -> ScanSummary:
        r"""
        Run the scan from the start, or from the checkpoint when resume is set.

        Returns:
            the totals so far; ``complete`` is False when the unit limit stopped the run early
        """
        start, totals = 0, ScanSummary(complete=True)
        if resume:
            if self.checkpoint is None or not self.checkpoint.exists():
                raise ValueError("Nothing to resume from: no checkpoint file.")
            start, totals = self._load()
            totals.complete = True
            logger.info("resuming %s scan of n = %d at unit %d", self.mode, self.n, start)
        stop = self.total if self.limit is None else min(self.total, start + self.limit)
        # chunks must start on a chunk boundary when resuming, so a partial last chunk is run whole
        stop = min(self.total, -(-stop // self.chunk_size) * self.chunk_size) if stop > start else stop
        jobs = self._jobs(start, stop)
        logger.info("%s scan of n = %d: %d chunks from unit %d", self.mode, self.n, len(jobs), start)
        if self.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                totals = self._collect(pool.map(_run_chunk, jobs), jobs, totals)
        else:
            totals = self._collect(map(_run_chunk, jobs), jobs, totals)
        totals.complete = stop >= self.total
        self._save(stop, totals)
        return totals

    def _collect(
        self, results: Iterator[Tuple[ScanSummary, List[dict]]], jobs: List[_Chunk], totals: ScanSummary
    ) -> ScanSummary:
        # results arrive in job order, so checkpoints only ever cover a finished prefix
        for job, (part, records) in zip(jobs, results):
            for record in records:
                self.on_report(record)
            for refutation in part.refutations:
                self._dump(refutation)
            totals = totals.merge(part)
            self._save(job.stop, totals)
            logger.info(
                "chunk %d done: %d/%d units, %d matched, %d refutations",
                job.chunk, job.stop, self.total, totals.matched, len(totals.refutations),
            )
        return totals
