#!/usr/bin/env python3

"""
The finite-map interface shared by every trie, law checkers for the
algebraic properties of maps, and a randomized differential driver that
replays operation scripts against an implementation and the oracle.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from errors import PreconditionError
from oracle import (oracle_combine, oracle_elements, oracle_empty, oracle_get,
                    oracle_map_filter, oracle_remove, oracle_set,
                    oracle_structural_equal)
from positive import Positive, encode_string
from utils import get_logger

logger = get_logger(__name__)

DENSE_KEY_LIMIT = 2**11
WORD_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class FiniteMap:
    """
    Class to represent one implementation of the finite-map operations.
    All operations are persistent: they never modify their map arguments.
    """

    name: str
    empty: Callable[[], Any]
    get: Callable[[Positive, Any], Optional[Any]]
    set: Callable[[Positive, Any, Any], Any]
    remove: Callable[[Positive, Any], Any]
    elements: Callable[..., List[Tuple[Positive, Any]]]
    map_filter: Callable[[Callable, Any], Any]
    combine: Callable[[Callable, Any, Any], Any]
    structural_equal: Callable[..., bool]
    footprint: Optional[Callable[[Any], Any]] = None
    node_classes: Tuple[type, ...] = ()

    def build(self, bindings) -> Any:
        m = self.empty()
        for k, v in bindings:
            m = self.set(k, v, m)
        return m


# ---------------------------------------------------------------- function tables


@dataclass(frozen=True)
class CombineTable:
    """
    A combining function given by cases over (absent|present, absent|present).
    The (absent, absent) case has no entry, so it always yields absent.
    """

    name: str
    left_only: Optional[Callable[[Any], Optional[Any]]] = None
    right_only: Optional[Callable[[Any], Optional[Any]]] = None
    both: Optional[Callable[[Any, Any], Optional[Any]]] = None

    def __call__(self, a, b):
        if a is None:
            if b is None or self.right_only is None:
                return None
            return self.right_only(b)
        if b is None:
            return None if self.left_only is None else self.left_only(a)
        return None if self.both is None else self.both(a, b)


def _keep(v):
    return v


COMBINE_TABLES = {
    t.name: t
    for t in (
        CombineTable("left_union", _keep, _keep, lambda a, b: a),
        CombineTable("right_union", _keep, _keep, lambda a, b: b),
        CombineTable("intersection", both=lambda a, b: a),
        CombineTable("difference", left_only=_keep),
        CombineTable("sym_difference", _keep, _keep),
        CombineTable("sum", _keep, _keep, lambda a, b: a + b),
    )
}

MAP_FILTERS = {
    "identity": _keep,
    "drop_all": lambda v: None,
    "keep_even": lambda v: v if v % 2 == 0 else None,
    "double": lambda v: 2 * v,
    "halve_even": lambda v: v // 2 if v % 2 == 0 else None,
}


def require_absent_on_absent(f) -> None:
    """Combining functions must map (absent, absent) to absent"""
    if f(None, None) is not None:
        raise PreconditionError("combining function must satisfy f(None, None) = None")


# ---------------------------------------------------------------- scripts


@dataclass(frozen=True)
class Set:
    key: Positive
    value: Any


@dataclass(frozen=True)
class Remove:
    key: Positive


@dataclass(frozen=True)
class Get:
    key: Positive


@dataclass(frozen=True)
class Elements:
    pass


@dataclass(frozen=True)
class MapFilter:
    table: str


@dataclass(frozen=True)
class Combine:
    """Combine with the map built by the secondary script seeded `other`"""

    table: str
    other: int


Step = Union[Set, Remove, Get, Elements, MapFilter, Combine]


@dataclass(frozen=True)
class OperationScript:
    """
    Class to represent a replayable sequence of map operations
    """

    seed: int
    steps: Tuple[Step, ...] = ()

    def __len__(self):
        return len(self.steps)


@dataclass
class LawReport:
    """
    Outcome of a law check or differential run; failures == 0 iff
    first_failure and script are None. The script rebuilds the first failing
    sample and ends with the step that exposes it.
    """

    law: str
    impl: str
    trials: int = 0
    failures: int = 0
    first_failure: Optional[str] = None
    script: Optional[OperationScript] = None
    failed_step: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def fail(self, message: str, script: OperationScript) -> None:
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = message
            self.script = script
            logger.debug("%s/%s: %s", self.impl, self.law, message)


def random_word(rng: random.Random, max_len: int = 6) -> bytes:
    n = rng.randint(1, max_len)
    return "".join(rng.choice(WORD_LETTERS) for _ in range(n)).encode("ascii")


def random_key(rng: random.Random) -> Positive:
    """Half dense (1..2048), half sparse (an encoded short word)"""
    if rng.random() < 0.5:
        return Positive(rng.randint(1, DENSE_KEY_LIMIT))
    return encode_string(random_word(rng))


def random_bindings(rng: random.Random, size: int) -> List[Tuple[Positive, int]]:
    return [(random_key(rng), rng.randrange(1000)) for _ in range(size)]


def secondary_bindings(seed: int) -> List[Tuple[Positive, int]]:
    rng = random.Random(seed)
    return random_bindings(rng, rng.randint(1, 32))


def generate_script(seed: int, length: int) -> OperationScript:
    """A deterministic random script of `length` steps"""
    rng = random.Random(seed)
    used: List[Positive] = []
    steps = []

    def some_key():
        if used and rng.random() < 0.7:
            return rng.choice(used)
        key = random_key(rng)
        used.append(key)
        return key

    for _ in range(length):
        roll = rng.random()
        if roll < 0.45:
            steps.append(Set(some_key(), rng.randrange(1000)))
        elif roll < 0.60:
            steps.append(Remove(some_key()))
        elif roll < 0.90:
            steps.append(Get(some_key()))
        elif roll < 0.95:
            steps.append(Elements())
        elif roll < 0.975:
            steps.append(MapFilter(rng.choice(sorted(MAP_FILTERS))))
        else:
            steps.append(
                Combine(rng.choice(sorted(COMBINE_TABLES)), rng.getrandbits(32))
            )
    return OperationScript(seed, tuple(steps))


def script_to_text(script: OperationScript) -> str:
    """One step per line: SET k v, DEL k, GET k, ELEMS, FILTER name, COMBINE name seed"""
    lines = [f"# seed {script.seed}"]
    for step in script.steps:
        if isinstance(step, Set):
            lines.append(f"SET {step.key.value} {step.value}")
        elif isinstance(step, Remove):
            lines.append(f"DEL {step.key.value}")
        elif isinstance(step, Get):
            lines.append(f"GET {step.key.value}")
        elif isinstance(step, Elements):
            lines.append("ELEMS")
        elif isinstance(step, MapFilter):
            lines.append(f"FILTER {step.table}")
        else:
            lines.append(f"COMBINE {step.table} {step.other}")
    return "\n".join(lines) + "\n"


def script_from_text(text: str) -> OperationScript:
    seed = 0
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        op, *args = line.split()
        try:
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "seed":
                    seed = int(parts[1])
            elif op == "SET" and len(args) == 2:
                steps.append(Set(Positive(int(args[0])), int(args[1])))
            elif op == "DEL" and len(args) == 1:
                steps.append(Remove(Positive(int(args[0]))))
            elif op == "GET" and len(args) == 1:
                steps.append(Get(Positive(int(args[0]))))
            elif op == "ELEMS" and not args:
                steps.append(Elements())
            elif op == "FILTER" and len(args) == 1 and args[0] in MAP_FILTERS:
                steps.append(MapFilter(args[0]))
            elif op == "COMBINE" and len(args) == 2 and args[0] in COMBINE_TABLES:
                steps.append(Combine(args[0], int(args[1])))
            else:
                raise ValueError(line)
        except ValueError as e:
            raise PreconditionError(f"line {lineno}: cannot parse {raw!r}") from e
    return OperationScript(seed, tuple(steps))


# ---------------------------------------------------------------- law checkers


def _build_script(impl: FiniteMap, m, *tail: Step) -> OperationScript:
    prefix = tuple(Set(k, v) for k, v in impl.elements(m))
    return OperationScript(0, prefix + tail)


def _filter_steps(f) -> Tuple[Step, ...]:
    """A MapFilter step when f is one of the named filters, else nothing"""
    for name, g in MAP_FILTERS.items():
        if g is f:
            return (MapFilter(name),)
    return ()


def check_get_empty(impl: FiniteMap, keys: Sequence[Positive]) -> LawReport:
    """get i empty = None"""
    report = LawReport("gempty", impl.name)
    empty = impl.empty()
    for i in keys:
        report.trials += 1
        got = impl.get(i, empty)
        if got is not None:
            report.fail(f"get {i!r} empty = {got!r}", OperationScript(0, (Get(i),)))
    return report


def check_get_set_same(impl: FiniteMap, samples) -> LawReport:
    """get i (set i x m) = x"""
    report = LawReport("gss", impl.name)
    for i, x, m in samples:
        report.trials += 1
        got = impl.get(i, impl.set(i, x, m))
        if got != x:
            report.fail(
                f"get {i!r} (set {i!r} {x!r} m) = {got!r}",
                _build_script(impl, m, Set(i, x), Get(i)),
            )
    return report


def check_get_set_other(impl: FiniteMap, samples) -> LawReport:
    """i <> j -> get i (set j x m) = get i m"""
    samples = list(samples)
    for i, j, _, _ in samples:
        if i == j:
            raise PreconditionError(f"get-set-other needs distinct keys, got {i!r} twice")
    report = LawReport("gso", impl.name)
    for i, j, x, m in samples:
        report.trials += 1
        got, expected = impl.get(i, impl.set(j, x, m)), impl.get(i, m)
        if got != expected:
            report.fail(
                f"get {i!r} (set {j!r} {x!r} m) = {got!r}, get {i!r} m = {expected!r}",
                _build_script(impl, m, Set(j, x), Get(i)),
            )
    return report


def check_combine(impl: FiniteMap, f, pairs, probes: Sequence[Positive] = ()) -> LawReport:
    """
    get i (combine f m1 m2) = f (get i m1) (get i m2). A failing script
    rebuilds m1 and reads i; m2 has no step form.
    """
    require_absent_on_absent(f)
    report = LawReport("gcombine", impl.name)
    for m1, m2 in pairs:
        combined = impl.combine(f, m1, m2)
        keys = {k for k, _ in impl.elements(m1)} | {k for k, _ in impl.elements(m2)}
        keys.update(probes)
        for i in sorted(keys):
            report.trials += 1
            got, expected = impl.get(i, combined), f(impl.get(i, m1), impl.get(i, m2))
            if got != expected:
                report.fail(
                    f"combine at {i!r}: got {got!r}, expected {expected!r}",
                    _build_script(impl, m1, Get(i)),
                )
    return report


def check_map_filter(impl: FiniteMap, f, maps, probes: Sequence[Positive] = ()) -> LawReport:
    """get i (map_filter f m) = f (get i m) when present, None otherwise"""
    report = LawReport("gmap_filter", impl.name)
    for m in maps:
        filtered = impl.map_filter(f, m)
        keys = {k for k, _ in impl.elements(m)} | set(probes)
        for i in sorted(keys):
            report.trials += 1
            before = impl.get(i, m)
            expected = None if before is None else f(before)
            got = impl.get(i, filtered)
            if got != expected:
                report.fail(
                    f"map_filter at {i!r}: got {got!r}, expected {expected!r}",
                    _build_script(impl, m, *_filter_steps(f), Get(i)),
                )
    return report


def check_set_commute(impl: FiniteMap, samples, structural: bool = False) -> LawReport:
    """set k1 v1 (set k2 v2 m) = set k2 v2 (set k1 v1 m) for k1 <> k2"""
    report = LawReport("set_commute", impl.name)
    for k1, v1, k2, v2, m in samples:
        if k1 == k2:
            raise PreconditionError(f"set-commute needs distinct keys, got {k1!r} twice")
        report.trials += 1
        a = impl.set(k1, v1, impl.set(k2, v2, m))
        b = impl.set(k2, v2, impl.set(k1, v1, m))
        same = impl.structural_equal(a, b) if structural else (
            impl.elements(a) == impl.elements(b)
        )
        if not same:
            report.fail(
                f"set {k1!r} and set {k2!r} do not commute",
                _build_script(impl, m, Set(k2, v2), Set(k1, v1), Elements()),
            )
    return report


def check_set_idempotent(impl: FiniteMap, samples, structural: bool = False) -> LawReport:
    """set k v m = m when get k m = v"""
    report = LawReport("set_idempotent", impl.name)
    for k, m in samples:
        v = impl.get(k, m)
        if v is None:
            raise PreconditionError(f"set-idempotent needs a bound key, {k!r} is absent")
        report.trials += 1
        again = impl.set(k, v, m)
        same = impl.structural_equal(again, m) if structural else (
            impl.elements(again) == impl.elements(m)
        )
        if not same:
            report.fail(
                f"rebinding {k!r} to its own value changed the map",
                _build_script(impl, m, Set(k, v), Elements()),
            )
    return report


# ---------------------------------------------------------------- samples


def sample_maps(impl: FiniteMap, rng: random.Random, count: int, max_size: int = 64):
    return [impl.build(random_bindings(rng, rng.randint(0, max_size))) for _ in range(count)]


def sample_set_triples(impl: FiniteMap, rng: random.Random, trials: int, pool: int = 64):
    maps = sample_maps(impl, rng, pool)
    return [(random_key(rng), rng.randrange(1000), rng.choice(maps)) for _ in range(trials)]


def sample_set_other(impl: FiniteMap, rng: random.Random, trials: int, pool: int = 64):
    maps = sample_maps(impl, rng, pool)
    out = []
    while len(out) < trials:
        m = rng.choice(maps)
        bound = impl.elements(m)
        i = rng.choice(bound)[0] if bound and rng.random() < 0.5 else random_key(rng)
        j = random_key(rng)
        if i != j:
            out.append((i, j, rng.randrange(1000), m))
    return out


def sample_map_pairs(impl: FiniteMap, rng: random.Random, count: int, max_size: int = 64):
    maps = sample_maps(impl, rng, 2 * count, max_size)
    return list(zip(maps[::2], maps[1::2]))


# ---------------------------------------------------------------- differential driver


ORACLE = FiniteMap(
    name="oracle",
    empty=oracle_empty,
    get=oracle_get,
    set=oracle_set,
    remove=oracle_remove,
    elements=lambda m, visits=None: oracle_elements(m),
    map_filter=oracle_map_filter,
    combine=oracle_combine,
    structural_equal=oracle_structural_equal,
)


def apply_step(impl: FiniteMap, step: Step, m):
    """The map after one step; Get and Elements leave it unchanged"""
    if isinstance(step, Set):
        return impl.set(step.key, step.value, m)
    if isinstance(step, Remove):
        return impl.remove(step.key, m)
    if isinstance(step, MapFilter):
        return impl.map_filter(MAP_FILTERS[step.table], m)
    if isinstance(step, Combine):
        other = impl.build(secondary_bindings(step.other))
        return impl.combine(COMBINE_TABLES[step.table], m, other)
    return m


def apply_script(impl: FiniteMap, script: OperationScript):
    m = impl.empty()
    for step in script.steps:
        m = apply_step(impl, step, m)
    return m


def _replay(impl: FiniteMap, script: OperationScript) -> Optional[Tuple[int, str]]:
    """
    Replay against impl and the oracle; (step index, message) of the first
    divergence. Set and Remove are checked at the touched key, in the new
    version and in the one they were applied to. Full element listings are
    compared after MapFilter, Combine and Elements steps and at the end;
    an Elements step also re-reads the version listed at the previous one.
    """
    state = impl.empty()
    model = ORACLE.empty()
    snapshot, snapshot_seen = state, impl.elements(state)
    index = -1
    for index, step in enumerate(script.steps):
        if isinstance(step, Get):
            got, expected = impl.get(step.key, state), ORACLE.get(step.key, model)
            if got != expected:
                return index, f"GET {step.key.value}: got {got!r}, oracle {expected!r}"
            continue
        if isinstance(step, (Set, Remove)):
            before = ORACLE.get(step.key, model)
            previous = state
            state = apply_step(impl, step, state)
            model = apply_step(ORACLE, step, model)
            got, expected = impl.get(step.key, state), ORACLE.get(step.key, model)
            if got != expected:
                return index, (
                    f"key {step.key.value} after step {index}: got {got!r}, oracle {expected!r}"
                )
            if impl.get(step.key, previous) != before:
                return index, f"step {index} modified the map it was applied to"
            continue
        state = apply_step(impl, step, state)
        model = apply_step(ORACLE, step, model)
        divergence = _compare_elements(impl, state, model, index)
        if divergence is not None:
            return divergence
        if isinstance(step, Elements):
            if impl.elements(snapshot) != snapshot_seen:
                return index, f"the map listed before step {index} was modified"
            snapshot, snapshot_seen = state, oracle_elements(model)
    return _compare_elements(impl, state, model, index)


def _compare_elements(impl: FiniteMap, state, model, index: int) -> Optional[Tuple[int, str]]:
    seen, expected = impl.elements(state), oracle_elements(model)
    if seen != expected:
        return index, (
            f"elements after step {index}: {len(seen)} bindings, oracle {len(expected)}"
        )
    return None


def shrink_script(impl: FiniteMap, script: OperationScript) -> OperationScript:
    """Remove chunks of steps while the script still diverges; locally minimal result"""
    failure = _replay(impl, script)
    if failure is None:
        return script
    steps = list(script.steps[: failure[0] + 1])
    chunks = 2
    while len(steps) >= 2:
        size = -(-len(steps) // chunks)
        reduced = False
        for start in range(0, len(steps), size):
            candidate = steps[:start] + steps[start + size:]
            if candidate and _replay(impl, OperationScript(script.seed, tuple(candidate))):
                steps = candidate
                chunks = max(chunks - 1, 2)
                reduced = True
                logger.debug("shrunk %s script to %d steps", impl.name, len(steps))
                break
        if not reduced:
            if size == 1:
                break
            chunks = min(chunks * 2, len(steps))
    return OperationScript(script.seed, tuple(steps))


def run_differential(impl: FiniteMap, script: OperationScript, shrink: bool = True) -> LawReport:
    """
    Replay script against impl and the oracle: every Get, the touched key of
    every update in both versions, and full listings after bulk steps and at
    the end. The first divergence is reported with a shrunk script.
    """
    report = LawReport("differential", impl.name, trials=len(script))
    failure = _replay(impl, script)
    if failure is not None:
        index, message = failure
        report.failed_step = index
        report.fail(message, shrink_script(impl, script) if shrink else script)
    return report


def run_scripts(
    impl: FiniteMap, seeds: Sequence[int], length: int, workers: int = 1
) -> List[LawReport]:
    """One differential run per seed; scripts are independent and may run on threads"""

    def one(seed):
        return run_differential(impl, generate_script(seed, length))

    if workers <= 1:
        return [one(seed) for seed in seeds]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, seeds))
