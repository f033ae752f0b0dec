"""Randomised and exhaustive identity checks, each pairing a closed form with an oracle.

Every suite expands into an ordered list of independent tasks.  Tasks are
picklable, so they can be fanned out over processes; results come back in
task order, which keeps reports byte-identical for any job count.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import MultiPoly
from .enumeration import (
    MAX_COLORINGS,
    MAX_OPERATIONS,
    DeltaWeight,
    brute_force_orbits,
    count_orbits,
    extended_enumerate,
    lemma_key_check,
    lhs_partition_oracle,
    lhs_stabilizer_oracle,
    polya_enumerate,
)
from .permgroup import PermGroup, Permutation, generate_group, named_group
from .symdet import (
    RatMatrix,
    det_bareiss,
    det_via_traces,
    elementary_symmetric_direct,
    elementary_symmetric_via_cycle_index,
    random_matrix,
    signed_power_sum_polynomial,
    trace_powers,
)

SUITES = ("lemma-key", "main1", "main3", "remark", "classical", "main2", "cross", "det")

# per-suite (max_n, max_m) used when the caller gives none
DEFAULT_BOUNDS = {
    "lemma-key": (5, 3),
    "main1": (5, 3),
    "main3": (5, 3),
    "remark": (5, 3),
    "classical": (5, 3),
    "main2": (7, 7),
    "cross": (4, 4),
    "det": (6, None),
}


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int | None = None
    max_m: int | None = None
    seed: int = 0
    trials: int = 50
    matrices: int = 200
    jobs: int = 1
    max_colorings: int = MAX_COLORINGS
    max_operations: int = MAX_OPERATIONS

    def bounds(self, suite: str) -> tuple[int, int | None]:
        n, m = DEFAULT_BOUNDS[suite]
        return (self.max_n or n, self.max_m or m)


@dataclass
class CheckResult:
    label: str
    ok: bool
    details: dict[str, str] = field(default_factory=dict)


@dataclass
class SuiteReport:
    name: str
    results: list[CheckResult]

    @property
    def checks(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"suite {self.name}: {self.checks} checks, {len(self.failures)} failures: {status}"

    def counterexample_lines(self) -> list[str]:
        if self.ok:
            return []
        first = self.failures[0]
        return [f"counterexample: {first.label}"] + [
            f"  {key}: {value}" for key, value in first.details.items()
        ]

    def to_json(self) -> dict:
        out = {"name": self.name, "checks": self.checks, "failures": len(self.failures), "ok": self.ok}
        if not self.ok:
            first = self.failures[0]
            out["counterexample"] = {"label": first.label, **first.details}
        return out


def _w(p: MultiPoly) -> str:
    return p.to_text("w")


def _group_text(group: PermGroup) -> str:
    return json.dumps(group.to_json())


# -- task bodies (module level so they pickle) --------------------------------


def _lemma_task(task) -> CheckResult:
    images, m, max_colorings = task
    sigma = Permutation(images)
    res = lemma_key_check(sigma, m, max_colorings)
    label = f"sigma={sigma.cycle_string()} n={sigma.degree} m={m}"
    return CheckResult(label, res.holds, {"lhs": _w(res.lhs), "rhs": _w(res.rhs)})


def _main_task(task) -> CheckResult:
    suite, group, delta, m, max_col, max_ops = task
    rhs = extended_enumerate(group, delta, m)
    details = {"group": _group_text(group), "delta": json.dumps(delta.to_json()), "m": str(m)}
    details["extended"] = _w(rhs)
    stab = lhs_stabilizer_oracle(group, delta, m, max_col, max_ops)
    details["stabilizer_oracle"] = _w(stab)
    ok = rhs == stab
    if suite == "main3":
        part = lhs_partition_oracle(group, delta, m, max_col, max_ops)
        details["partition_oracle"] = _w(part)
        ok = ok and part == rhs
    label = f"n={group.degree} |G|={group.order} delta={delta.kind} m={m}"
    return CheckResult(label, ok, details)


def _is_count_poly(p: MultiPoly) -> bool:
    return all(c.denominator == 1 and c >= 0 for _, c in p.items())


def _remark_task(task) -> CheckResult:
    spec, m, max_col = task
    group = named_group(spec)
    ext = extended_enumerate(group, DeltaWeight.uniform(), m)
    orbits = brute_force_orbits(group, m, max_col)
    ok = _is_count_poly(ext) and ext == orbits
    return CheckResult(f"{spec} m={m}", ok, {"extended": _w(ext), "orbits": _w(orbits)})


def _classical_task(task) -> CheckResult:
    spec, m, max_col = task
    group = named_group(spec)
    inv = polya_enumerate(group, m)
    orbits = brute_force_orbits(group, m, max_col)
    at_ones = inv.evaluate([1] * m)
    burnside = count_orbits(group, m)
    ok = inv == orbits and at_ones == burnside == orbits.coefficient_sum()
    details = {"polya": _w(inv), "orbits": _w(orbits), "at_ones": str(at_ones), "burnside": str(burnside)}
    return CheckResult(f"{spec} m={m}", ok, details)


def _main2_task(task) -> CheckResult:
    n, m = task
    by_class = elementary_symmetric_via_cycle_index(n, m, "partition")
    by_element = elementary_symmetric_via_cycle_index(n, m, "elements")
    direct = elementary_symmetric_direct(n, m)
    ok = by_class == by_element == direct
    details = {"partition": _w(by_class), "elements": _w(by_element), "direct": _w(direct)}
    return CheckResult(f"n={n} m={m}", ok, details)


def _cross_task(task) -> CheckResult:
    n, m = task
    ext = extended_enumerate(named_group(f"sym:{n}"), DeltaWeight.sign(), m)
    if n <= m:
        expected = elementary_symmetric_direct(n, m)
    else:
        # e_n of fewer than n variables is zero
        expected = MultiPoly.zero(m)
    details = {"extended": _w(ext), "expected": _w(expected)}
    if n > m:
        vanishing = signed_power_sum_polynomial(n, m)
        details["signed_partition_sum"] = _w(vanishing)
        ok = ext == expected and vanishing.is_zero()
    else:
        ok = ext == expected
    return CheckResult(f"sym:{n} m={m}", ok, details)


def _det_task(task) -> CheckResult:
    label, rows, expected = task
    matrix = RatMatrix(rows)
    via_traces = det_via_traces(matrix)
    bareiss = det_bareiss(matrix)
    ok = via_traces == bareiss
    details = {"matrix": json.dumps(matrix.to_json()), "via_traces": str(via_traces), "bareiss": str(bareiss)}
    if expected is not None:
        details["expected"] = str(expected)
        ok = ok and via_traces == expected
    return CheckResult(label, ok, details)


# -- task builders --------------------------------------------------------------


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


def random_delta(rng: random.Random, group: PermGroup, kind: str) -> DeltaWeight:
    if kind != "table":
        return DeltaWeight(kind)
    return DeltaWeight(
        "table",
        {s.key(): Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for s in group.elements},
    )


def random_triples(config: VerifyConfig, suite: str) -> list[tuple[PermGroup, DeltaWeight, int]]:
    """Seeded (G, Δ, m) triples; G is generated by at most two random permutations."""
    max_n, max_m = config.bounds(suite)
    rng = random.Random(config.seed)
    kinds = ("uniform", "sign", "table")
    triples = []
    for i in range(config.trials):
        n = rng.randint(1, max_n)
        gens = [random_permutation(rng, n) for _ in range(rng.randint(0, 2))]
        group = generate_group(n, gens)
        m = rng.randint(1, max_m)
        triples.append((group, random_delta(rng, group, kinds[i % 3]), m))
    return triples


NAMED_FAMILIES = ("sym", "alt", "cyclic", "dihedral")


def _build_tasks(suite: str, config: VerifyConfig) -> tuple[Callable, list]:
    max_n, max_m = config.bounds(suite)
    if suite == "lemma-key":
        tasks = [
            (p, m, config.max_colorings)
            for n in range(1, max_n + 1)
            for p in itertools.permutations(range(n))
            for m in range(1, max_m + 1)
        ]
        return _lemma_task, tasks
    if suite in ("main1", "main3"):
        tasks = [
            (suite, g, d, m, config.max_colorings, config.max_operations)
            for g, d, m in random_triples(config, suite)
        ]
        return _main_task, tasks
    if suite in ("remark", "classical"):
        families = NAMED_FAMILIES + (("trivial",) if suite == "classical" else ())
        tasks = [
            (f"{fam}:{n}", m, config.max_colorings)
            for fam in families
            for n in range(1, max_n + 1)
            for m in range(1, max_m + 1)
        ]
        return (_remark_task if suite == "remark" else _classical_task), tasks
    if suite == "main2":
        tasks = [(n, m) for m in range(1, max_m + 1) for n in range(1, min(m, max_n) + 1)]
        return _main2_task, tasks
    if suite == "cross":
        tasks = [(n, m) for n in range(1, max_n + 1) for m in range(1, max_m + 1)]
        return _cross_task, tasks
    if suite == "det":
        return _det_task, det_cases(config)
    raise ValueError(f"unknown suite {suite!r}")


def det_cases(config: VerifyConfig) -> list:
    max_n, _ = config.bounds("det")
    rng = random.Random(config.seed)
    cases = []
    for n in range(1, max_n + 1):
        for i in range(config.matrices):
            cases.append((f"random n={n} #{i}", random_matrix(rng, n).rows, None))
    cases.append(("identity n=3", RatMatrix.identity(3).rows, Fraction(1)))
    cases.append(("identity n=6", RatMatrix.identity(6).rows, Fraction(1)))
    repeated = ((1, 2, 3), (4, 5, 6), (1, 2, 3))
    cases.append(("repeated row", RatMatrix(repeated).rows, Fraction(0)))
    cases.append(("[[1,2],[3,4]]", RatMatrix(((1, 2), (3, 4))).rows, Fraction(-2)))
    return cases


def _map(func: Callable, tasks: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(tasks) < 2:
        return [func(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, tasks, chunksize=chunk))


def run_suite(suite: str, config: VerifyConfig = VerifyConfig()) -> SuiteReport:
    func, tasks = _build_tasks(suite, config)
    report = SuiteReport(suite, _map(func, tasks, config.jobs))
    if suite == "det":
        # the pinned 2x2 case also pins its trace vector
        tv = trace_powers(RatMatrix(((1, 2), (3, 4))))
        ok = tv == [5, 29]
        report.results.append(CheckResult("trace vector of [[1,2],[3,4]]", ok, {"traces": str([str(t) for t in tv])}))
    return report


def run_suites(names: Sequence[str], config: VerifyConfig = VerifyConfig()) -> list[SuiteReport]:
    expanded: list[str] = []
    for name in names:
        expanded.extend(SUITES if name == "all" else [name])
    return [run_suite(name, config) for name in expanded]
