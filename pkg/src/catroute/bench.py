"""Benchmark harness: generate, construct, verify, and emit one CSV row per spec.

Columns, in order:

    seed,family,n,m,diam,memdim,all_pairs_ok,max_route_len,mean_route_len,construct_millis,ratio

``ratio`` is memdim / (diam + log2 n)^2, the measured counterpart of the
construction's guaranteed growth rate (nan when the denominator is zero, which
only happens at n = 1). Apart from ``construct_millis``, which is wall clock,
the output is byte-stable for a fixed spec list.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .categories import membership_dimension
from .checks import route_statistics
from .construct import graph_categories
from .errors import InternalCheckError, ValidationError
from .generators import GeneratorSpec, generate
from .graph import diameter

CSV_HEADER = (
    "seed,family,n,m,diam,memdim,all_pairs_ok,max_route_len,"
    "mean_route_len,construct_millis,ratio"
)

DEFAULT_ALL_PAIRS_CAP = 500


@dataclass(frozen=True)
class BenchRecord:
    """Measured facts about one generated instance and its constructed system."""

    seed: int
    family: str
    n: int
    m: int
    diam: int
    memdim: int
    all_pairs_ok: bool
    max_route_len: int
    mean_route_len: float
    construct_millis: int
    ratio: float

    def csv_row(self):
        return ",".join(
            (
                str(self.seed),
                self.family,
                str(self.n),
                str(self.m),
                str(self.diam),
                str(self.memdim),
                "true" if self.all_pairs_ok else "false",
                str(self.max_route_len),
                f"{self.mean_route_len:.4f}",
                str(self.construct_millis),
                f"{self.ratio:.6f}" if not math.isnan(self.ratio) else "nan",
            )
        )


def bench_one(spec, all_pairs_cap=DEFAULT_ALL_PAIRS_CAP):
    """Generate one instance, construct its categories, verify all pairs."""
    if spec.n > all_pairs_cap:
        raise ValidationError(
            f"n={spec.n} exceeds the all-pairs verification cap of {all_pairs_cap}"
        )
    g = generate(spec)
    started = time.perf_counter()
    system = graph_categories(g)
    construct_millis = int(round((time.perf_counter() - started) * 1000))
    diam = diameter(g)
    memdim = membership_dimension(system)
    report, max_len, mean_len = route_statistics(g, system)
    if not report.holds:
        raise InternalCheckError(
            f"constructed system failed to route pair {report.witness[:2]} "
            f"(stuck at {report.witness[2]}) on {spec.family} n={spec.n} seed={spec.seed}"
        )
    denominator = (diam + math.log2(g.n)) ** 2
    ratio = memdim / denominator if denominator > 0 else float("nan")
    return BenchRecord(
        seed=spec.seed,
        family=spec.family,
        n=g.n,
        m=g.num_edges,
        diam=diam,
        memdim=memdim,
        all_pairs_ok=report.holds,
        max_route_len=max_len,
        mean_route_len=mean_len,
        construct_millis=construct_millis,
        ratio=ratio,
    )


def run_benchmark(specs, sink=None, all_pairs_cap=DEFAULT_ALL_PAIRS_CAP):
    """Run every spec in order; write CSV to ``sink`` if given; return records."""
    records = [bench_one(spec, all_pairs_cap) for spec in specs]
    if sink is not None:
        sink.write(CSV_HEADER + "\n")
        for record in records:
            sink.write(record.csv_row() + "\n")
    return records


def specs_from_json(payload):
    """Decode a bench spec file: a JSON list of generator spec objects."""
    if isinstance(payload, dict) and "specs" in payload:
        payload = payload["specs"]
    if not isinstance(payload, list):
        raise ValidationError("bench spec file must be a JSON list of spec objects")
    return [GeneratorSpec.from_dict(entry) for entry in payload]
