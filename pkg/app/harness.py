"""Experiment driver: solve corpora, compare with the oracle, check bounds."""

from __future__ import annotations

import csv
import json
import logging
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import IO

from marshmallow import ValidationError

from app import schemas
from app.generators import GenSpec, generate
from app.graph import Graph, is_dominating_set, neighborhood_of_set
from app.local import RoundTrace
from app.mds import Config, DsResult, Phase2Rule, default_c, solve, total_bound_factor
from app.minors import find_canonical_k33, nonplanar_blocks
from app.oracle import OracleBudgetExceeded, exact_mds
from shared.constants import (
    BOUND_CHECK_KEYS,
    CSV_COLUMNS,
    CSV_SCHEMA_VERSION,
    DEFAULT_ORACLE_BUDGET,
    DEFAULT_ORACLE_LIMIT,
    MAX_CANONICAL_K33_VERTICES,
    ROUND_SLACK,
)

logger = logging.getLogger(__name__)


class ManifestError(ValueError):
    """Raised when a corpus manifest does not validate."""


class ResultFormatError(ValueError):
    """Raised when a stored result cannot be read back."""


@dataclass(frozen=True)
class HarnessSettings:
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    oracle_budget: int = DEFAULT_ORACLE_BUDGET

    @classmethod
    def from_config(cls, config: Mapping) -> "HarnessSettings":
        return cls(
            oracle_limit=config["MDS_ORACLE_LIMIT"],
            oracle_budget=config["MDS_ORACLE_BUDGET"],
        )


@dataclass(frozen=True)
class ExperimentConfig:
    """Algorithm parameters for a corpus; unset values follow each instance."""

    c: int | None = None
    genus: int | None = None
    t: int | None = None
    phase2_rule: str = Phase2Rule.MAX_RESIDUAL.value

    def for_instance(self, certified_genus: int) -> Config:
        genus = certified_genus if self.genus is None else self.genus
        c = default_c(genus) if self.c is None else self.c
        return Config(c=c, g=genus, t=self.t, phase2_rule=self.phase2_rule)

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "genus": self.genus,
            "t": self.t,
            "phase2_rule": Phase2Rule.parse(self.phase2_rule).value,
        }


@dataclass
class ExperimentRecord:
    family: str
    params: dict
    seed: int
    shuffle_ids: int | None
    config: ExperimentConfig
    n: int | None = None
    m: int | None = None
    certified_genus: int | None = None
    c: int | None = None
    t: int | None = None
    g: int | None = None
    phase2_rule: str | None = None
    size_phase1: int | None = None
    size_preprocess: int | None = None
    size_phase2: int | None = None
    total: int | None = None
    gamma: int | None = None
    ratio: float | None = None
    rounds_phase1: int | None = None
    rounds_preprocess: int | None = None
    rounds_phase2: int | None = None
    rounds_total: int | None = None
    is_dominating: bool | None = None
    bound_checks: dict[str, bool | None] = field(
        default_factory=lambda: dict.fromkeys(BOUND_CHECK_KEYS)
    )
    error: str | None = None

    @property
    def spec(self) -> GenSpec:
        return GenSpec(self.family, self.params, self.seed, self.shuffle_ids)

    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and self.is_dominating is True
            and all(value is not False for value in self.bound_checks.values())
        )

    def to_json(self) -> dict:
        data = {
            name: getattr(self, name)
            for name in CSV_COLUMNS
            if not name.startswith("check_") and name != "params"
        }
        data["params"] = dict(self.params)
        data["config"] = self.config.to_dict()
        data["bound_checks"] = dict(self.bound_checks)
        return data

    def to_row(self) -> dict:
        row = {}
        for name in CSV_COLUMNS:
            if name.startswith("check_"):
                value = self.bound_checks.get(name.removeprefix("check_"))
            elif name == "params":
                value = json.dumps(self.params, sort_keys=True, separators=(",", ":"))
            else:
                value = getattr(self, name)
            if value is None:
                value = ""
            elif isinstance(value, bool):
                value = "pass" if value else "fail"
            elif isinstance(value, float):
                value = f"{value:.6f}"
            row[name] = value
        return row

    @classmethod
    def from_json(cls, data: Mapping) -> "ExperimentRecord":
        try:
            loaded = schemas.ExperimentRecord().load(data)
        except ValidationError as exc:
            raise ResultFormatError(f"invalid experiment record: {exc.messages}") from exc
        config = ExperimentConfig(**loaded.pop("config"))
        checks = dict.fromkeys(BOUND_CHECK_KEYS)
        checks.update(loaded.pop("bound_checks"))
        return cls(config=config, bound_checks=checks, **loaded)


def ds_result_to_dict(g: Graph, result: DsResult, gamma: int | None = None) -> dict:
    data = {
        "d_phase1": sorted(result.d_phase1),
        "d_preprocess": sorted(result.d_preprocess),
        "d_phase2": sorted(result.d_phase2),
        "dom_map": {str(v): w for v, w in sorted(result.dom_map.items())},
        "trace": [
            {"phase_name": trace.phase_name, "rounds_used": trace.rounds_used}
            for trace in result.trace
        ],
        "config": result.config.to_dict(),
        "t": result.t,
        "preprocess_clean": result.preprocess_clean,
        "chosen_witnesses": [list(witness) for witness in result.chosen_witnesses],
        "dominating_set": sorted(result.dominating_set),
        "total": result.total,
        "rounds_used": result.rounds_used,
        "is_dominating": is_dominating_set(g, result.dominating_set),
        "gamma": gamma,
    }
    return schemas.DsResult().dump(data)


def ds_result_from_dict(data: Mapping) -> tuple[DsResult, int | None]:
    try:
        loaded = schemas.DsResult().load(data)
    except ValidationError as exc:
        raise ResultFormatError(f"invalid result document: {exc.messages}") from exc
    try:
        dom_map = {int(v): w for v, w in loaded["dom_map"].items()}
    except ValueError as exc:
        raise ResultFormatError(f"dom_map keys must be vertex IDs: {exc}") from exc
    result = DsResult(
        d_phase1=frozenset(loaded["d_phase1"]),
        d_preprocess=frozenset(loaded["d_preprocess"]),
        d_phase2=frozenset(loaded["d_phase2"]),
        dom_map=MappingProxyType(dom_map),
        trace=tuple(RoundTrace(**trace) for trace in loaded["trace"]),
        config=Config(**loaded["config"]),
        t=loaded["t"],
        preprocess_clean=loaded["preprocess_clean"],
        chosen_witnesses=tuple(tuple(w) for w in loaded["chosen_witnesses"]),
    )
    return result, loaded["gamma"]


def residual_clean(g: Graph, d: Iterable[int]) -> bool:
    """True when no vertex of G - D has a canonical K_{3,3} witness."""
    remaining = g.without(d)
    if not nonplanar_blocks(remaining, 6):
        return True
    return all(find_canonical_k33(remaining, v) is None for v in remaining.vertices)


def evaluate_bound_checks(
    g: Graph,
    result: DsResult,
    gamma: int | None,
) -> dict[str, bool | None]:
    cfg = result.config
    checks: dict[str, bool | None] = dict.fromkeys(BOUND_CHECK_KEYS)
    if gamma is not None:
        checks["phase1_bound"] = len(result.d_phase1) <= (cfg.c + 1) * gamma
        checks["total_bound"] = result.total <= total_bound_factor(cfg.c, result.t) * gamma
    checks["preprocess_size"] = (
        len(result.d_preprocess) <= MAX_CANONICAL_K33_VERTICES * cfg.g
    )
    checks["rounds"] = result.rounds_used <= 12 * cfg.g + ROUND_SLACK
    checks["postprocess_clean"] = residual_clean(g, result.d)
    return checks


def result_invariants(g: Graph, result: DsResult) -> dict[str, bool]:
    """Structural invariants of a result, independent of any bound."""
    d = result.d
    undominated = set(g.vertices) - set(neighborhood_of_set(g, d))
    members_known = all(v in g for v in result.dominating_set)
    return {
        "is_dominating": members_known and is_dominating_set(g, result.dominating_set),
        "dom_map_domain": set(result.dom_map) == undominated,
        "dom_map_closed": all(
            v in g and w in g and (w == v or g.has_edge(v, w))
            for v, w in result.dom_map.items()
        ),
        "d_phase2_image": set(result.dom_map.values()) == set(result.d_phase2),
    }


def compute_gamma(g: Graph, settings: HarnessSettings) -> int | None:
    if g.order() > settings.oracle_limit:
        return None
    try:
        return exact_mds(g, settings.oracle_budget).gamma
    except OracleBudgetExceeded as exc:
        logger.warning(
            "Oracle budget exhausted; gamma-dependent checks skipped",
            extra={"n": g.order(), "explored_nodes": exc.explored_nodes},
        )
        return None


@dataclass(frozen=True)
class VerificationReport:
    invariants: dict[str, bool]
    bound_checks: dict[str, bool | None]
    gamma: int | None

    @property
    def failures(self) -> list[str]:
        failed = [name for name, ok in self.invariants.items() if not ok]
        failed += [name for name, ok in self.bound_checks.items() if ok is False]
        return failed

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "invariants": self.invariants,
            "bound_checks": self.bound_checks,
            "gamma": self.gamma,
            "failures": self.failures,
        }


def verify_result(
    g: Graph,
    result: DsResult,
    gamma: int | None = None,
    settings: HarnessSettings | None = None,
) -> VerificationReport:
    settings = settings or HarnessSettings()
    invariants = result_invariants(g, result)
    if gamma is None:
        gamma = compute_gamma(g, settings)
    if not invariants["is_dominating"]:
        checks = dict.fromkeys(BOUND_CHECK_KEYS)
    else:
        checks = evaluate_bound_checks(g, result, gamma)
    return VerificationReport(invariants=invariants, bound_checks=checks, gamma=gamma)


def run_instance(
    spec: GenSpec,
    choice: ExperimentConfig,
    settings: HarnessSettings,
) -> ExperimentRecord:
    record = ExperimentRecord(
        family=spec.family,
        params=dict(spec.params),
        seed=spec.seed,
        shuffle_ids=spec.shuffle_ids,
        config=choice,
    )
    try:
        g = generate(spec)
        cfg = choice.for_instance(spec.certified_genus)
        result = solve(g, cfg)
        gamma = compute_gamma(g, settings)

        record.n, record.m = g.order(), g.size()
        record.certified_genus = spec.certified_genus
        record.c, record.t, record.g = cfg.c, result.t, cfg.g
        record.phase2_rule = cfg.phase2_rule.value
        record.size_phase1 = len(result.d_phase1)
        record.size_preprocess = len(result.d_preprocess)
        record.size_phase2 = len(result.d_phase2)
        record.total = result.total
        record.gamma = gamma
        if gamma is not None:
            record.ratio = result.total / gamma if gamma else 1.0
        record.rounds_phase1 = result.rounds_for("phase1")
        record.rounds_preprocess = result.rounds_for("preprocess")
        record.rounds_phase2 = result.rounds_for("phase2")
        record.rounds_total = result.rounds_used
        record.is_dominating = is_dominating_set(g, result.dominating_set)
        record.bound_checks = evaluate_bound_checks(g, result, gamma)
    except Exception as exc:
        logger.exception("Instance failed", extra=spec.describe())
        record.error = f"{type(exc).__name__}: {exc}"
        return record

    if not record.passed:
        logger.warning(
            "Instance failed a check",
            extra={**spec.describe(), "bound_checks": record.bound_checks},
        )
    return record


def _run_instance_args(args) -> ExperimentRecord:
    return run_instance(*args)


def run_experiment(
    specs: Sequence[GenSpec],
    choice: ExperimentConfig,
    settings: HarnessSettings | None = None,
    jobs: int = 1,
) -> list[ExperimentRecord]:
    settings = settings or HarnessSettings()
    ordered = sorted(specs, key=lambda spec: spec.sort_key)
    work = [(spec, choice, settings) for spec in ordered]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_instance_args, work))
    else:
        records = [_run_instance_args(args) for args in work]
    logger.info(
        "Experiment finished",
        extra={
            "instances": len(records),
            "failed": sum(1 for record in records if not record.passed),
        },
    )
    return records


def load_manifest(data: Mapping) -> tuple[str, list[GenSpec], ExperimentConfig]:
    try:
        loaded = schemas.Manifest().load(data)
        config = schemas.ExperimentConfig().load(loaded["config"])
    except ValidationError as exc:
        raise ManifestError(f"invalid manifest: {exc.messages}") from exc
    specs = [
        GenSpec(entry["family"], entry["params"], seed, entry["shuffle_ids"])
        for entry in loaded["instances"]
        for seed in entry["seeds"]
    ]
    return loaded["name"], specs, ExperimentConfig(**config)


def max_ratio(records: Iterable[ExperimentRecord]) -> float | None:
    return max((r.ratio for r in records if r.ratio is not None), default=None)


def write_csv(records: Iterable[ExperimentRecord], stream: IO[str]) -> None:
    stream.write(f"schema={CSV_SCHEMA_VERSION}\n")
    writer = csv.DictWriter(stream, fieldnames=list(CSV_COLUMNS), lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.to_row())


def write_jsonl(records: Iterable[ExperimentRecord], stream: IO[str]) -> None:
    for record in records:
        stream.write(json.dumps(record.to_json(), sort_keys=True) + "\n")


def read_jsonl(stream: IO[str]) -> list[ExperimentRecord]:
    records = []
    for line_number, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ResultFormatError(f"line {line_number}: {exc}") from exc
        records.append(ExperimentRecord.from_json(data))
    return records


@dataclass(frozen=True)
class ReverifyMismatch:
    descriptor: dict
    field_name: str
    stored: object
    recomputed: object


def reverify(
    records: Iterable[ExperimentRecord],
    settings: HarnessSettings | None = None,
) -> list[ReverifyMismatch]:
    """Regenerate and re-solve every record, reporting changed outcomes."""
    settings = settings or HarnessSettings()
    mismatches = []
    for stored in records:
        fresh = run_instance(stored.spec, stored.config, settings)
        compared = {
            "is_dominating": (stored.is_dominating, fresh.is_dominating),
            "total": (stored.total, fresh.total),
            "error": (stored.error is None, fresh.error is None),
        }
        for key in BOUND_CHECK_KEYS:
            compared[f"check_{key}"] = (
                stored.bound_checks.get(key),
                fresh.bound_checks.get(key),
            )
        for name, (before, after) in compared.items():
            if before != after:
                mismatches.append(
                    ReverifyMismatch(stored.spec.describe(), name, before, after)
                )
    return mismatches
