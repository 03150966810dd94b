"""Suite orchestration: seeded case grids, reports, and replay.

Five suites probe the library end to end:

* ``guarantees`` — builder outputs are valid and meet their size bounds
  on seeded random colorings.
* ``tables`` — exhaustive extremal values with envelope and
  cross-notion consistency checks; exports the oracle CSV.
* ``twinbound`` — the composite-coloring twin bound and its
  per-decomposition part bounds on seeded specs.
* ``lcs-tail`` — Monte Carlo exceedance rate of LCS over 3*sqrt(r)
  (a statistical probe: it reports, it never fails the run).
* ``blockclaims`` — exhaustive structural checks on the twins of small
  block colorings.

A master seed fans out to per-case seeds by mixing a case counter, so
appending cases never shifts existing ones; reports are bit-reproducible
from (config, seed, version). Failing cases carry seed, parameters, and
witness files, and any case can be re-run alone via ``--replay``.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import time
from dataclasses import asdict, dataclass, field

from ._version import VERSION
from .builder import build_twin_binary, build_twin_general
from .constructions import (
    BlockProfile,
    block_coloring,
    composite_coloring,
    random_coloring,
    random_composite_spec,
    random_permutation_pair,
    twin_block_graph,
    uncovered_blocks,
)
from .core import EMPTY_TWIN, TwinPair, twin_to_json, validate_twin, write_coloring
from .oracle import (
    DEFAULT_MAX_ENUMERATIONS,
    BudgetExceededError,
    enumerate_twins,
    exact_F,
    exact_F_string,
    exact_F_weak,
    max_string_twin,
    max_twin,
)
from .rng import derive_seed
from .sequences import LetterString, lcs_length, write_permutation, write_string

DEFAULT_SEED = 0x5457494E
ENV_OUT_DIR = "TWIN_OUT_DIR"
BLOCKCLAIMS_MAX_TOTAL = 15

SUITE_NAMES = ("guarantees", "tables", "twinbound", "lcs-tail", "blockclaims")


class ConfigError(ValueError):
    """Invalid suite configuration; `field_name` names the offending field."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field_name = field_name


@dataclass
class SuiteConfig:
    suite: str
    grid: list
    samples: int = 1
    seed: int = DEFAULT_SEED
    max_states: int | None = None
    max_enumerations: int = DEFAULT_MAX_ENUMERATIONS
    time_limit: float | None = None
    out_dir: str | None = None
    jobs: int = 1

    def validate(self) -> None:
        if self.suite not in SUITE_NAMES:
            raise ConfigError("suite", f"unknown suite {self.suite!r}")
        if not isinstance(self.grid, list) or not self.grid:
            raise ConfigError("grid", "must be a non-empty list of parameter dicts")
        if self.samples < 1:
            raise ConfigError("samples", "must be positive")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError("seed", "must be a non-negative integer")
        if self.max_states is not None and self.max_states < 1:
            raise ConfigError("max_states", "must be positive")
        if self.max_enumerations < 1:
            raise ConfigError("max_enumerations", "must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ConfigError("time_limit", "must be positive")
        if self.jobs < 1:
            raise ConfigError("jobs", "must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(sorted(unknown)[0], "unknown configuration field")
        if "suite" not in data:
            raise ConfigError("suite", "missing")
        return cls(**data)

    @classmethod
    def from_json_file(cls, path: str) -> "SuiteConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


def default_config(suite: str, seed: int = DEFAULT_SEED) -> SuiteConfig:
    """Built-in grids; the defaults match the repository's verification runs."""
    if suite == "guarantees":
        grid = [{"n": 40, "r": 2}, {"n": 50, "r": 2}, {"n": 30, "r": 3}, {"n": 60, "r": 2}]
        return SuiteConfig(suite, grid, samples=500, seed=seed)
    if suite == "tables":
        grid = [{"kind": "coloring", "n": n, "r": 2} for n in range(2, 7)]
        grid += [{"kind": "coloring", "n": 2, "r": 3}]
        grid += [{"kind": "coloring", "n": n, "r": 1} for n in (4, 5)]
        grid += [{"kind": "weak", "n": n} for n in range(2, 9)]
        grid += [{"kind": "string", "n": n, "r": 2} for n in range(2, 13)]
        return SuiteConfig(suite, grid, samples=1, seed=seed)
    if suite == "twinbound":
        return SuiteConfig(suite, [{"r": 4, "m": 4}], samples=50, seed=seed)
    if suite == "lcs-tail":
        return SuiteConfig(suite, [{"r": 100}], samples=200, seed=seed)
    if suite == "blockclaims":
        grid = []
        for m in (1, 2, 3):
            for letters in itertools.product((1, 2), repeat=m):
                if sum(3**letter for letter in letters) <= BLOCKCLAIMS_MAX_TOTAL:
                    grid.append({"r": 2, "x": list(letters)})
        return SuiteConfig(suite, grid, samples=1, seed=seed)
    raise ConfigError("suite", f"unknown suite {suite!r}")


@dataclass
class CaseRecord:
    case_id: str
    index: int
    params: dict
    seed: int
    value: object
    bound: object
    passed: bool | None  # None for probe and resource records
    kind: str  # "assert" | "probe" | "resource"
    detail: str = ""
    witness_file: str = ""


@dataclass
class RunReport:
    suite: str
    version: str
    seed: int
    config: dict
    cases: list[CaseRecord] = field(default_factory=list)

    @property
    def failed(self) -> list[CaseRecord]:
        return [c for c in self.cases if c.kind == "assert" and c.passed is False]

    @property
    def ok(self) -> bool:
        return not self.failed

    def aggregate(self) -> dict:
        total = len(self.cases)
        passed = sum(1 for c in self.cases if c.kind == "assert" and c.passed)
        probes = sum(1 for c in self.cases if c.kind == "probe")
        resources = sum(1 for c in self.cases if c.kind == "resource")
        return {
            "cases": total,
            "passed": passed,
            "failed": len(self.failed),
            "probes": probes,
            "resource_errors": resources,
        }

    def to_json_text(self) -> str:
        payload = {
            "suite": self.suite,
            "version": self.version,
            "seed": self.seed,
            "config": self.config,
            "aggregate": self.aggregate(),
            "cases": [asdict(c) for c in self.cases],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv_text(self) -> str:
        fields = SUITE_CSV_FIELDS[self.suite]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for case in self.cases:
            row = {
                "case_id": case.case_id,
                "seed": case.seed,
                "value": case.value,
                "bound": case.bound,
                "passed": _tristate(case.passed),
                "kind": case.kind,
                "detail": case.detail,
                "witness_file": case.witness_file,
            }
            row.update(case.params)
            writer.writerow({k: row.get(k, "") for k in fields})
        return buf.getvalue()

    def summary_text(self) -> str:
        agg = self.aggregate()
        lines = [
            f"suite {self.suite} (version {self.version}, seed {self.seed})",
            f"  cases: {agg['cases']}  passed: {agg['passed']}  failed: {agg['failed']}"
            f"  probes: {agg['probes']}  resource: {agg['resource_errors']}",
        ]
        if self.suite == "lcs-tail":
            exceed = sum(1 for c in self.cases if c.kind == "probe" and c.value == "exceeded")
            lines.append(f"  exceedances of the LCS threshold: {exceed}")
        for case in self.failed[:10]:
            lines.append(f"  FAIL {case.case_id} params={case.params} detail={case.detail}")
        if len(self.failed) > 10:
            lines.append(f"  ... and {len(self.failed) - 10} more failures")
        return "\n".join(lines)


def _tristate(passed: bool | None) -> str:
    if passed is None:
        return ""
    return "1" if passed else "0"


SUITE_CSV_FIELDS = {
    "guarantees": ["case_id", "builder", "n", "r", "sample", "seed", "value", "bound", "kind", "passed", "detail", "witness_file"],
    "tables": ["case_id", "table", "n", "r", "value", "bound", "kind", "passed", "detail", "witness_file"],
    "twinbound": ["case_id", "r", "m", "sample", "seed", "value", "bound", "kind", "passed", "detail"],
    "lcs-tail": ["case_id", "r", "sample", "seed", "value", "bound", "kind", "detail"],
    "blockclaims": ["case_id", "x", "total", "value", "bound", "kind", "passed", "detail"],
}


# ---------------------------------------------------------------------------
# guarantees
# ---------------------------------------------------------------------------


def _cases_guarantees(config: SuiteConfig) -> list[dict]:
    cases = []
    index = 0
    draw = 0
    for entry in config.grid:
        n, r = int(entry["n"]), int(entry["r"])
        for sample in range(config.samples):
            seed = derive_seed(config.seed, draw)
            draw += 1
            builders = ["general"] + (["binary"] if r == 2 else [])
            for builder_name in builders:
                cases.append(
                    {
                        "index": index,
                        "seed": seed,
                        "params": {"builder": builder_name, "n": n, "r": r, "sample": sample},
                    }
                )
                index += 1
    return cases


def _run_guarantees(config: SuiteConfig, case: dict) -> CaseRecord:
    params = case["params"]
    n, r = params["n"], params["r"]
    coloring = random_coloring(n, r, case["seed"])
    if params["builder"] == "general":
        twin = build_twin_general(coloring)
        bound = n // (r * r + 1)
    else:
        twin = build_twin_binary(coloring)
        bound = n // 4
    verdict = validate_twin(coloring, twin)
    passed = bool(verdict) and twin.size >= bound
    detail = ""
    witness_file = ""
    if not passed:
        detail = f"size={twin.size} valid={bool(verdict)} reason={verdict.reason}"
        if config.out_dir:
            witness_file = _write_failure_witness(config.out_dir, case, coloring, twin)
    return CaseRecord(
        case_id=_case_id(config.suite, case["index"]),
        index=case["index"],
        params=params,
        seed=case["seed"],
        value=twin.size,
        bound=bound,
        passed=passed,
        kind="assert",
        detail=detail,
        witness_file=witness_file,
    )


def _write_failure_witness(out_dir: str, case: dict, coloring, twin) -> str:
    rel_dir = os.path.join(out_dir, "witnesses")
    os.makedirs(rel_dir, exist_ok=True)
    base = f"fail_{case['index']:05d}"
    write_coloring(coloring, os.path.join(rel_dir, base + ".coloring"))
    with open(os.path.join(rel_dir, base + ".twin.json"), "w") as fh:
        fh.write(twin_to_json(twin) + "\n")
    return os.path.join("witnesses", base + ".coloring")


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _cases_tables(config: SuiteConfig) -> list[dict]:
    cases = []
    for index, entry in enumerate(config.grid):
        params = {"table": entry["kind"], "n": int(entry["n"]), "r": entry.get("r", "")}
        cases.append({"index": index, "seed": derive_seed(config.seed, index), "params": params})
    return cases


def _run_tables(config: SuiteConfig, case: dict) -> CaseRecord:
    params = case["params"]
    kind, n = params["table"], params["n"]
    r = params["r"]
    try:
        if kind == "coloring":
            result = exact_F(n, int(r), max_enumerations=config.max_enumerations)
        elif kind == "weak":
            result = exact_F_weak(n, max_enumerations=config.max_enumerations)
        elif kind == "string":
            result = exact_F_string(n, int(r), max_enumerations=config.max_enumerations)
        else:
            raise ConfigError("grid", f"unknown table kind {kind!r}")
    except BudgetExceededError as exc:
        return CaseRecord(
            case_id=_case_id(config.suite, case["index"]),
            index=case["index"],
            params=params,
            seed=case["seed"],
            value="",
            bound="",
            passed=None,
            kind="resource",
            detail=str(exc),
        )
    value = result.value
    lo, hi = _table_envelope(kind, n, r)
    passed = lo <= value <= hi
    witness_file = ""
    if config.out_dir:
        witness_file = _write_table_witness(config.out_dir, kind, n, r, result.minimizer)
    return CaseRecord(
        case_id=_case_id(config.suite, case["index"]),
        index=case["index"],
        params=params,
        seed=case["seed"],
        value=value,
        bound=f"[{lo},{hi}]",
        passed=passed,
        kind="assert",
        detail="" if passed else f"value {value} outside envelope [{lo},{hi}]",
        witness_file=witness_file,
    )


def _table_envelope(kind: str, n: int, r) -> tuple[int, int]:
    """Provable bounds for each table row; rows must land inside them."""
    if kind == "coloring":
        r = int(r)
        if n < 2:
            return 0, 0
        if r == 1:
            return n // 2, n // 2
        if n == 2:
            return 1, 1
        if r == 2:
            return max(1, n // 4), n // 2
        return 1, n // 2
    if kind == "weak":
        if n < 2:
            return 0, 0
        if n <= 3:
            return 1, 1
        return max(1, n // 4), n // 2
    if kind == "string":
        return 0, n // 2
    raise ConfigError("grid", f"unknown table kind {kind!r}")


def _write_table_witness(out_dir: str, kind: str, n: int, r, minimizer) -> str:
    rel_dir = os.path.join(out_dir, "witnesses")
    os.makedirs(rel_dir, exist_ok=True)
    suffix = f"_r{r}" if r != "" else ""
    rel = os.path.join("witnesses", f"{kind}_n{n}{suffix}.txt")
    path = os.path.join(out_dir, f"{rel}")
    if kind == "coloring":
        write_coloring(minimizer, path)
    elif kind == "weak":
        write_permutation(minimizer, path)
    else:
        write_string(minimizer, path)
    return rel


def _post_tables(config: SuiteConfig, records: list[CaseRecord]) -> list[CaseRecord]:
    """Cross-row consistency: the coloring minimum never exceeds the weak one."""
    values: dict[tuple[str, int, object], object] = {}
    for rec in records:
        if rec.kind == "assert":
            values[(rec.params["table"], rec.params["n"], rec.params["r"])] = rec.value
    extra = []
    index = len(records)
    for (kind, n, r), value in sorted(
        ((k, v) for k, v in values.items()), key=lambda item: (item[0][1], str(item[0][2]))
    ):
        if kind != "coloring" or r != 2:
            continue
        weak = values.get(("weak", n, ""))
        if weak is None:
            continue
        passed = value <= weak
        extra.append(
            CaseRecord(
                case_id=_case_id(config.suite, index),
                index=index,
                params={"table": "compare", "n": n, "r": 2},
                seed=config.seed,
                value=f"{value}<={weak}",
                bound="coloring<=weak",
                passed=passed,
                kind="assert",
                detail="" if passed else f"F({n},2)={value} exceeds weak minimum {weak}",
            )
        )
        index += 1
    return extra


# ---------------------------------------------------------------------------
# twinbound
# ---------------------------------------------------------------------------


def _cases_twinbound(config: SuiteConfig) -> list[dict]:
    cases = []
    index = 0
    for entry in config.grid:
        r, m = int(entry["r"]), int(entry["m"])
        if r < 2 or r % 2 != 0:
            raise ConfigError("grid", f"composite palette must be even and >= 2, got r={r}")
        if m < 1:
            raise ConfigError("grid", f"block count must be positive, got m={m}")
        for sample in range(config.samples):
            cases.append(
                {
                    "index": index,
                    "seed": derive_seed(config.seed, index),
                    "params": {"r": r, "m": m, "sample": sample},
                }
            )
            index += 1
    return cases


def _run_twinbound(config: SuiteConfig, case: dict) -> CaseRecord:
    from .constructions import decompose_composite_twin

    params = case["params"]
    r, m = params["r"], params["m"]
    spec = random_composite_spec(r, m, case["seed"])
    coloring = composite_coloring(spec)
    size, _ = max_twin(coloring)
    fx = max_string_twin(spec.x)[0]
    fy = max_string_twin(spec.y)[0]
    max_lcs = max(
        lcs_length(spec.perms[i], spec.perms[j])
        for i in range(len(spec.perms))
        for j in range(i + 1, len(spec.perms))
    )
    rhs = m + 2 * fy * r + (2 * fx + 1) * (max_lcs + 1)
    problems = []
    if size > rhs:
        problems.append(f"max twin {size} exceeds bound {rhs}")
    y = spec.y.letters
    checked = 0
    for first, second in enumerate_twins(coloring):
        twin = TwinPair(first, second)
        dec = decompose_composite_twin(spec, twin)
        checked += 1
        if len(dec.same_block) > m:
            problems.append(f"{twin}: same-block ranks exceed m")
        for h in dec.same_block:
            if len(dec.intervals[h - 1]) > 1:
                problems.append(f"{twin}: same-block rank {h} holds more than one step")
        if len(dec.same_y) > 2 * fy:
            problems.append(f"{twin}: same-y ranks exceed 2*f_string(y)={2 * fy}")
        if len(dec.rest) > 2 * fx + 1:
            problems.append(f"{twin}: rest ranks exceed 2*f_string(x)+1={2 * fx + 1}")
        for h in dec.rest:
            pa = spec.perms[y[dec.a_blocks[h - 1] - 1] - 1]
            pb = spec.perms[y[dec.b_blocks[h - 1] - 1] - 1]
            if len(dec.intervals[h - 1]) > lcs_length(pa, pb) + 1:
                problems.append(f"{twin}: rank {h} interval exceeds its LCS bound")
        if sum(len(iv) for iv in dec.intervals) != twin.size:
            problems.append(f"{twin}: intervals do not sum to the twin size")
        if len(problems) >= 5:
            break
    passed = not problems
    return CaseRecord(
        case_id=_case_id(config.suite, case["index"]),
        index=case["index"],
        params=params,
        seed=case["seed"],
        value=size,
        bound=rhs,
        passed=passed,
        kind="assert",
        detail="" if passed else "; ".join(problems[:5]) + f" (twins checked: {checked})",
    )


# ---------------------------------------------------------------------------
# lcs-tail
# ---------------------------------------------------------------------------


def _cases_lcs_tail(config: SuiteConfig) -> list[dict]:
    cases = []
    index = 0
    for entry in config.grid:
        r = int(entry["r"])
        for sample in range(config.samples):
            cases.append(
                {
                    "index": index,
                    "seed": derive_seed(config.seed, index),
                    "params": {"r": r, "sample": sample},
                }
            )
            index += 1
    return cases


def _run_lcs_tail(config: SuiteConfig, case: dict) -> CaseRecord:
    params = case["params"]
    r = params["r"]
    p1, p2 = random_permutation_pair(r, case["seed"])
    value = lcs_length(p1, p2)
    exceeded = value * value > 9 * r  # lcs > 3*sqrt(r), exact in integers
    return CaseRecord(
        case_id=_case_id(config.suite, case["index"]),
        index=case["index"],
        params=params,
        seed=case["seed"],
        value="exceeded" if exceeded else value,
        bound=f"3*sqrt({r})",
        passed=None,
        kind="probe",
        detail=f"lcs={value}" if exceeded else "",
    )


# ---------------------------------------------------------------------------
# blockclaims
# ---------------------------------------------------------------------------


def _cases_blockclaims(config: SuiteConfig) -> list[dict]:
    cases = []
    for index, entry in enumerate(config.grid):
        params = {"r": int(entry.get("r", 2)), "x": list(entry["x"])}
        cases.append({"index": index, "seed": derive_seed(config.seed, index), "params": params})
    return cases


def _run_blockclaims(config: SuiteConfig, case: dict) -> CaseRecord:
    params = case["params"]
    profile = BlockProfile(params["r"], LetterString(params["r"], tuple(params["x"])))
    case_id = _case_id(config.suite, case["index"])
    if profile.total > BLOCKCLAIMS_MAX_TOTAL:
        return CaseRecord(
            case_id=case_id,
            index=case["index"],
            params={**params, "total": profile.total},
            seed=case["seed"],
            value="",
            bound=BLOCKCLAIMS_MAX_TOTAL,
            passed=None,
            kind="resource",
            detail=f"profile size {profile.total} exceeds the allowlist "
            f"(L <= {BLOCKCLAIMS_MAX_TOTAL})",
        )
    count, violations, exceeded = check_block_claims(profile, config.max_enumerations)
    if exceeded:
        return CaseRecord(
            case_id=case_id,
            index=case["index"],
            params={**params, "total": profile.total},
            seed=case["seed"],
            value=count,
            bound=config.max_enumerations,
            passed=None,
            kind="resource",
            detail=f"twin enumeration exceeds the budget ({config.max_enumerations})",
        )
    passed = not violations
    return CaseRecord(
        case_id=case_id,
        index=case["index"],
        params={**params, "total": profile.total},
        seed=case["seed"],
        value=count,
        bound=0,
        passed=passed,
        kind="assert",
        detail="" if passed else "; ".join(violations[:5]),
    )


def check_block_claims(profile: BlockProfile, max_twins: int) -> tuple[int, list[str], bool]:
    """Enumerate every twin of the block coloring and test the four
    structural claims: component shapes, loop parity, weight dominance,
    and covered-path endpoint equality. Returns (count, violations,
    budget_exceeded)."""
    letters = profile.x.letters
    coloring = block_coloring(profile)
    violations: list[str] = []

    all_blocks = frozenset(range(1, profile.block_count + 1))
    if uncovered_blocks(profile, EMPTY_TWIN) != all_blocks:
        violations.append("empty twin must leave every block uncovered")
    if twin_block_graph(profile, EMPTY_TWIN).component_count != profile.block_count:
        violations.append("empty twin must induce one singleton per block")

    count = 0
    for first, second in enumerate_twins(coloring):
        count += 1
        if count > max_twins:
            return count, violations, True
        twin = TwinPair(first, second)
        graph = twin_block_graph(profile, twin)
        uncovered = uncovered_blocks(profile, twin)
        for comp in graph.components:
            if comp.kind == "other":
                _note(violations, f"twin {first}/{second}: component {comp.vertices} "
                      "is not a singleton, loop, or path")
            elif comp.kind == "loop":
                if comp.vertices[0] not in uncovered:
                    _note(violations, f"twin {first}/{second}: looped block "
                          f"{comp.vertices[0]} is fully covered (parity)")
            elif comp.kind == "path":
                vs = comp.vertices
                for t in range(len(vs) - 2):
                    k1, k2, k3 = vs[t], vs[t + 1], vs[t + 2]
                    if letters[k2 - 1] > max(letters[k1 - 1], letters[k3 - 1]):
                        if k2 not in uncovered:
                            _note(violations, f"twin {first}/{second}: dominant middle "
                                  f"block {k2} is fully covered")
                if not (set(vs) & uncovered) and letters[vs[0] - 1] != letters[vs[-1] - 1]:
                    _note(violations, f"twin {first}/{second}: covered path "
                          f"{vs} has unequal endpoint letters")
    return count, violations, False


def _note(violations: list[str], message: str) -> None:
    if len(violations) < 50:
        violations.append(message)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


_SUITES = {
    "guarantees": (_cases_guarantees, _run_guarantees, None),
    "tables": (_cases_tables, _run_tables, _post_tables),
    "twinbound": (_cases_twinbound, _run_twinbound, None),
    "lcs-tail": (_cases_lcs_tail, _run_lcs_tail, None),
    "blockclaims": (_cases_blockclaims, _run_blockclaims, None),
}


def _case_id(suite: str, index: int) -> str:
    return f"{suite}-{index:05d}"


def _pool_run_case(payload):
    suite, config_dict, case = payload
    config = SuiteConfig.from_dict(config_dict)
    return _SUITES[suite][1](config, case)


def run_suite(config: SuiteConfig, only_case: str | None = None) -> RunReport:
    """Run a suite (or a single case of it) and return the report.

    Cases execute on a worker pool when jobs > 1 and are always reduced
    in case-index order, so reports do not depend on completion order.
    """
    config.validate()
    build_cases, run_case, post = _SUITES[config.suite]
    cases = build_cases(config)
    if only_case is not None:
        cases = [c for c in cases if _case_id(config.suite, c["index"]) == only_case]
        if not cases:
            raise ConfigError("replay", f"unknown case id {only_case!r}")
    report = RunReport(config.suite, VERSION, config.seed, config.to_dict())
    if config.jobs > 1 and len(cases) > 1:
        import multiprocessing

        payloads = [(config.suite, config.to_dict(), case) for case in cases]
        with multiprocessing.Pool(processes=config.jobs) as pool:
            records = pool.map(_pool_run_case, payloads)
    else:
        records = []
        started = time.monotonic()
        deadline_hit = False
        for case in cases:
            if (
                config.time_limit is not None
                and time.monotonic() - started > config.time_limit
            ):
                deadline_hit = True
            if deadline_hit:
                records.append(
                    CaseRecord(
                        case_id=_case_id(config.suite, case["index"]),
                        index=case["index"],
                        params=case["params"],
                        seed=case["seed"],
                        value="",
                        bound="",
                        passed=None,
                        kind="resource",
                        detail="wall-clock soft limit reached",
                    )
                )
                continue
            records.append(run_case(config, case))
    records.sort(key=lambda rec: rec.index)
    report.cases.extend(records)
    if post is not None and only_case is None:
        report.cases.extend(post(config, records))
    if config.out_dir:
        write_report_files(report, config.out_dir)
    return report


def write_report_files(report: RunReport, out_dir: str) -> None:
    os.makedirs(out_dir, exist_ok=True)
    base = report.suite.replace("-", "_")
    with open(os.path.join(out_dir, f"{base}_report.json"), "w") as fh:
        fh.write(report.to_json_text())
    with open(os.path.join(out_dir, f"{base}_cases.csv"), "w") as fh:
        fh.write(report.to_csv_text())
    if report.suite == "tables":
        with open(os.path.join(out_dir, "tables_values.csv"), "w") as fh:
            fh.write(tables_values_csv(report))


def tables_values_csv(report: RunReport) -> str:
    """The oracle export format: kind,n,r,value,witness_file."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "n", "r", "value", "witness_file"])
    for case in report.cases:
        if case.kind != "assert" or case.params.get("table") == "compare":
            continue
        writer.writerow(
            [case.params["table"], case.params["n"], case.params["r"], case.value, case.witness_file]
        )
    return buf.getvalue()


def replay_case(report_path: str, case_id: str) -> CaseRecord:
    """Re-run one case from a written report, in isolation."""
    with open(report_path) as fh:
        payload = json.load(fh)
    config = SuiteConfig.from_dict(payload["config"])
    config.out_dir = None
    report = run_suite(config, only_case=case_id)
    return report.cases[0]


def cmd_guarantees(config: SuiteConfig) -> RunReport:
    return _cmd(config, "guarantees")


def cmd_tables(config: SuiteConfig) -> RunReport:
    return _cmd(config, "tables")


def cmd_twinbound(config: SuiteConfig) -> RunReport:
    return _cmd(config, "twinbound")


def cmd_lcs_tail(config: SuiteConfig) -> RunReport:
    return _cmd(config, "lcs-tail")


def cmd_blockclaims(config: SuiteConfig) -> RunReport:
    return _cmd(config, "blockclaims")


def _cmd(config: SuiteConfig, expected: str) -> RunReport:
    if config.suite != expected:
        raise ConfigError("suite", f"expected {expected!r}, got {config.suite!r}")
    return run_suite(config)
