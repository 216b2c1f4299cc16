#!/usr/bin/env python3

"""
Benchmark harness: Dense, Sparse, Repeated and Dict workloads over the
trie implementations, reporting wall time plus allocated and live nodes.

Every workload first runs once with allocation counting switched on; that
run carries the correctness assertions and produces the node and word
counts. Timing repetitions follow as separate, uninstrumented runs.
"""

from dataclasses import dataclass, field
from pathlib import Path
from statistics import mean
from typing import Callable, List, Optional, Sequence

import click
import pandas as pd

import original_trie as ot
from canonical_trie import c_footprint, c_rebuild
from errors import BenchmarkCorrectnessError, PreconditionError, TrieError
from instrumentation import AllocationCounter, Footprint, counting_allocations
from mapkit import FiniteMap
from positive import Positive, encode_string
from registry import IMPLEMENTATIONS, ORIGINAL
from settings import load_settings
from string_dict import d_empty, d_get, d_set
from utils import console, get_logger, measure, set_log_level

logger = get_logger(__name__)

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
MASK64 = 2**64 - 1
MAX_WORD_LENGTH = 18

WORKLOADS = ("dense", "sparse", "repeated", "dict")
TRIE_TAGS = ("original", "node01", "canonical")
DICT_TAGS = ("original", "canonical", "baseline")
METRICS = ("time_s", "nodes_allocated", "words_allocated", "live_nodes", "live_words")
CSV_COLUMNS = ["impl", "workload", "metric", "value", "relative_to_original"]

REPORT_HEADER = (
    "# allocation figures count trie nodes and heap words, not bytes\n"
    "# generated words have mean length ~9.5 (1 + draw mod 18); "
    "natural-language corpora average ~8\n"
)


# ---------------------------------------------------------------- corpus


class Lcg:
    """64-bit linear congruential generator; each draw is the upper 32 bits"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def draw(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & MASK64
        return self.state >> 32


def gen_words(seed: int, count: int) -> List[bytes]:
    """`count` distinct lowercase words, deterministic in seed"""
    if count < 1:
        raise PreconditionError(f"word count must be at least 1, got {count}")
    lcg = Lcg(seed)
    seen = set()
    words = []
    while len(words) < count:
        length = 1 + lcg.draw() % MAX_WORD_LENGTH
        word = bytes(ord("a") + lcg.draw() % 26 for _ in range(length))
        if word in seen:
            continue
        seen.add(word)
        words.append(word)
    return words


def load_words(path) -> List[bytes]:
    """One ASCII word per line, lengths 1..18; blank lines skipped, duplicates dropped"""
    words, seen, duplicates = [], set(), 0
    with open(path, "rb") as file:
        for lineno, raw in enumerate(file, 1):
            word = raw.strip()
            if not word:
                continue
            if not word.isascii():
                raise PreconditionError(f"{path}:{lineno}: word is not ASCII")
            if len(word) > MAX_WORD_LENGTH:
                raise PreconditionError(
                    f"{path}:{lineno}: word longer than {MAX_WORD_LENGTH} bytes"
                )
            if word in seen:
                duplicates += 1
                continue
            seen.add(word)
            words.append(word)
    if duplicates:
        logger.warning("%s: dropped %d duplicate words", path, duplicates)
    if not words:
        raise PreconditionError(f"{path}: no words")
    logger.debug("loaded %d words from %s", len(words), path)
    return words


# ---------------------------------------------------------------- types


@dataclass
class Workload:
    """
    Class to represent one benchmark configuration
    """

    kind: str
    dense_n: int = 2048
    sparse_count: int = 5064
    repeated_keys: int = 7
    repeated_iters: int = 1_000_000
    seed: int = 24657
    words_file: Optional[str] = None

    def __post_init__(self):
        if self.kind not in WORKLOADS:
            raise PreconditionError(f"unknown workload {self.kind!r}")
        for name in ("dense_n", "sparse_count", "repeated_keys", "repeated_iters"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be at least 1")

    def words(self) -> List[bytes]:
        if self.words_file is not None:
            return load_words(self.words_file)
        return gen_words(self.seed, self.sparse_count)


@dataclass
class BenchReport:
    """
    Class to represent the measurements of one (implementation, workload) run
    """

    impl: str
    workload: str
    time_s: float
    nodes_allocated: int = 0
    words_allocated: int = 0
    live_nodes: int = 0
    live_words: int = 0
    repetitions: int = 1
    rep_times: List[float] = field(default_factory=list)
    # False for the dict baseline: timed only, no node counts
    instrumented: bool = True

    def __post_init__(self):
        if self.repetitions < 1:
            raise PreconditionError("a report needs at least one repetition")
        if self.live_nodes > self.nodes_allocated:
            raise BenchmarkCorrectnessError(
                f"{self.impl}/{self.workload}: {self.live_nodes} live nodes "
                f"but only {self.nodes_allocated} allocated"
            )


# ---------------------------------------------------------------- runs


def _time(job: Callable[[], object], min_time: float, max_reps: int) -> List[float]:
    times = []
    while not times or (sum(times) < min_time and len(times) < max_reps):
        _, elapsed = measure(job)
        times.append(elapsed)
    return times


def _run(
    impl: FiniteMap,
    workload: str,
    job: Callable[[], object],
    min_time: float,
    max_reps: int,
    check: Optional[Callable[[object, Footprint], None]] = None,
) -> BenchReport:
    counter = AllocationCounter()
    with counting_allocations(counter, impl.node_classes):
        final = job()
    live = impl.footprint(final)
    if check is not None:
        check(final, live)
    times = _time(job, min_time, max_reps)
    return BenchReport(
        impl=impl.name,
        workload=workload,
        time_s=mean(times),
        nodes_allocated=counter.nodes,
        words_allocated=counter.words,
        live_nodes=live.nodes,
        live_words=live.words,
        repetitions=len(times),
        rep_times=times,
    )


def _insert_then_lookup(impl: FiniteMap, keys: Sequence[Positive], workload: str):
    def job():
        m = impl.empty()
        for value, k in enumerate(keys, 1):
            m = impl.set(k, value, m)
        for k in keys:
            if impl.get(k, m) is None:
                raise BenchmarkCorrectnessError(f"{impl.name}/{workload}: {k!r} lost")
        return m

    return job


def run_dense(impl: FiniteMap, n: int, min_time: float = 1.0, max_reps: int = 10) -> BenchReport:
    """Insert keys 1..n in order, then look every key up"""
    if n < 1:
        raise PreconditionError("dense workload needs n >= 1")
    keys = [Positive(i) for i in range(1, n + 1)]
    return _run(impl, "dense", _insert_then_lookup(impl, keys, "dense"), min_time, max_reps)


def run_sparse(
    impl: FiniteMap, words: Sequence[bytes], min_time: float = 1.0, max_reps: int = 10
) -> BenchReport:
    """Insert the encoded words, then look every one up"""
    if not words:
        raise PreconditionError("sparse workload needs at least one word")
    keys = [encode_string(w) for w in words]
    if len(set(keys)) != len(keys):
        raise PreconditionError("sparse workload words must be distinct")
    return _run(impl, "sparse", _insert_then_lookup(impl, keys, "sparse"), min_time, max_reps)


def run_repeated(
    impl: FiniteMap,
    key_range: int = 7,
    iterations: int = 1_000_000,
    min_time: float = 1.0,
    max_reps: int = 10,
) -> BenchReport:
    """
    Overwrite keys 1..key_range in turn, `iterations` sets in total; the live
    tree must not outgrow the canonical tree of the same bindings
    """
    if iterations < 1 or key_range < 1:
        raise PreconditionError("repeated workload needs positive key range and iterations")
    keys = [Positive(i) for i in range(1, key_range + 1)]

    def job():
        m = impl.empty()
        for it in range(iterations):
            m = impl.set(keys[it % key_range], it, m)
        return m

    def check(final, live: Footprint):
        bound = c_footprint(c_rebuild(impl.elements(final))).nodes
        if live.nodes > bound:
            raise BenchmarkCorrectnessError(
                f"{impl.name}/repeated: {live.nodes} live nodes, canonical bound {bound}"
            )
        if live.values != min(key_range, iterations):
            raise BenchmarkCorrectnessError(
                f"{impl.name}/repeated: {live.values} bindings survive"
            )
        if impl is ORIGINAL and not ot.well_formed(final):
            raise BenchmarkCorrectnessError("original/repeated: tree not well formed")

    return _run(impl, "repeated", job, min_time, max_reps, check)


def run_dict(
    impl_tag: str, words: Sequence[bytes], min_time: float = 1.0, max_reps: int = 10
) -> BenchReport:
    """
    The string-keyed workload; trie tags go through the StringDict layer with
    keys encoded on the fly, `baseline` uses a plain dict (time only)
    """
    if impl_tag not in DICT_TAGS:
        raise PreconditionError(f"dict workload runs {', '.join(DICT_TAGS)}, not {impl_tag!r}")
    if len(set(words)) != len(words):
        raise PreconditionError("dict workload words must be distinct")

    if impl_tag == "baseline":

        def baseline():
            d = {}
            for value, w in enumerate(words, 1):
                d[w] = value
            for w in words:
                if d.get(w) is None:
                    raise BenchmarkCorrectnessError(f"baseline/dict: {w!r} lost")
            return d

        baseline()
        times = _time(baseline, min_time, max_reps)
        return BenchReport(
            "baseline",
            "dict",
            mean(times),
            repetitions=len(times),
            rep_times=times,
            instrumented=False,
        )

    impl = IMPLEMENTATIONS[impl_tag]

    def job():
        d = d_empty(impl)
        for value, w in enumerate(words, 1):
            d = d_set(w, value, d)
        for w in words:
            if d_get(w, d) is None:
                raise BenchmarkCorrectnessError(f"{impl_tag}/dict: {w!r} lost")
        return d.backing

    return _run(impl, "dict", job, min_time, max_reps)


# ---------------------------------------------------------------- reporting


def _relative(value, base) -> Optional[float]:
    if value is None or base is None or not base:
        return None
    return value / base


def _long_frame(reports: Sequence[BenchReport]) -> pd.DataFrame:
    rows = []
    base = {
        (r.workload, metric): getattr(r, metric)
        for r in reports
        if r.impl == "original"
        for metric in METRICS
    }
    for r in reports:
        for metric in METRICS:
            value = getattr(r, metric) if r.instrumented or metric == "time_s" else None
            rows.append(
                {
                    "impl": r.impl,
                    "workload": r.workload,
                    "metric": metric,
                    "value": value,
                    "relative_to_original": _relative(value, base.get((r.workload, metric))),
                }
            )
    return pd.DataFrame(rows, columns=CSV_COLUMNS, dtype=object)


_TABLE_ROWS = {
    "time_s": ("time (s)", "relative time"),
    "nodes_allocated": ("allocated nodes", "relative allocated nodes"),
    "words_allocated": ("allocated words", "relative allocated words"),
    "live_nodes": ("live nodes", "relative live nodes"),
    "live_words": ("live words", "relative live words"),
}


def report(fmt: str, reports: Sequence[BenchReport]) -> str:
    """
    Render reports as a table (one block per workload, implementations as
    columns, relatives against original = 100%) or as long-form CSV
    """
    frame = _long_frame(reports)
    if fmt == "csv":
        return frame.to_csv(index=False)
    if fmt != "table":
        raise PreconditionError(f"unknown report format {fmt!r}")
    blocks = [REPORT_HEADER]
    for workload, group in frame.groupby("workload", sort=False):
        columns = list(dict.fromkeys(group["impl"]))
        table = pd.DataFrame(columns=columns, dtype=object)
        for metric, (label, relative_label) in _TABLE_ROWS.items():
            rows = group[group["metric"] == metric].set_index("impl")
            table.loc[label] = [_format_value(rows.at[c, "value"], metric) for c in columns]
            table.loc[relative_label] = [
                _format_relative(rows.at[c, "relative_to_original"]) for c in columns
            ]
        blocks.append(f"== {workload} ==\n{table.to_string()}\n")
    return "\n".join(blocks)


def _format_value(value, metric: str) -> str:
    if value is None or pd.isna(value):
        return "-"
    return f"{value:.4f}" if metric == "time_s" else str(int(value))


def _format_relative(value) -> str:
    return "-" if value is None or pd.isna(value) else f"{100 * value:.0f}%"


# ---------------------------------------------------------------- driver


def run_all(workloads: Sequence[str], impls: Sequence[str], settings, words_file=None):
    """Run every compatible (workload, implementation) pair in order"""
    reports = []
    words = None
    for kind in workloads:
        workload = Workload(
            kind,
            dense_n=settings.dense_n,
            sparse_count=settings.sparse_count,
            repeated_keys=settings.repeated_keys,
            repeated_iters=settings.repeated_iters,
            seed=settings.seed,
            words_file=words_file,
        )
        if kind in ("sparse", "dict") and words is None:
            words = workload.words()
        tags = DICT_TAGS if kind == "dict" else TRIE_TAGS
        for tag in impls:
            if tag not in tags:
                logger.debug("skipping %s on the %s workload", tag, kind)
                continue
            timing = (settings.min_time, settings.max_reps)
            if kind == "dense":
                r = run_dense(IMPLEMENTATIONS[tag], workload.dense_n, *timing)
            elif kind == "sparse":
                r = run_sparse(IMPLEMENTATIONS[tag], words, *timing)
            elif kind == "repeated":
                r = run_repeated(
                    IMPLEMENTATIONS[tag], workload.repeated_keys, workload.repeated_iters, *timing
                )
            else:
                r = run_dict(tag, words, *timing)
            console.print(
                f"[green]✓[/green] {kind:<8} {tag:<9} {r.time_s:.4f}s "
                f"x{r.repetitions}  "
                + (f"{r.nodes_allocated} nodes allocated" if r.instrumented else "not instrumented")
            )
            reports.append(r)
    return reports


@click.command()
@click.option("--workload", type=click.Choice(WORKLOADS + ("all",)), default="all")
@click.option(
    "--impl", "impl_tag", type=click.Choice(TRIE_TAGS + ("baseline", "all")), default="all"
)
@click.option("--seed", type=int, default=None, help="corpus seed (default 24657)")
@click.option("--dense-n", type=int, default=None)
@click.option("--sparse-count", type=int, default=None)
@click.option("--repeated-keys", type=int, default=None)
@click.option("--repeated-iters", type=int, default=None)
@click.option("--min-time", type=float, default=None)
@click.option("--max-reps", type=int, default=None)
@click.option("--words-file", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--format", "fmt", type=click.Choice(["table", "csv"]), default="table")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None)
def main(workload, impl_tag, words_file, fmt, out, config, **overrides):
    """Run the trie benchmarks and print a report"""
    try:
        settings = load_settings(config, **overrides)
        set_log_level(settings.log_level)
        workloads = WORKLOADS if workload == "all" else (workload,)
        impls = TRIE_TAGS + ("baseline",) if impl_tag == "all" else (impl_tag,)
        reports = run_all(workloads, impls, settings, words_file)
    except (TrieError, ValueError) as e:
        console.print(f"[red]✗[/red] {e}")
        raise SystemExit(1) from e
    if not reports:
        logger.warning("no implementation in %s runs the %s workload", impls, workload)
    text = report(fmt, reports)
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("report written to %s", out)


if __name__ == "__main__":
    main()
