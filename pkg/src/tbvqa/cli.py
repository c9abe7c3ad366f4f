"""Experiment runner CLI: generate instances, run parameter-setting studies,
and post-process the logs into figure-ready CSV tables.

Subcommands: generate, run, tails, attractor, spread, verify. Exit codes:
0 success, 1 verification mismatch, 2 configuration error, 3 exact oracle
unavailable. Studies are driven by a single TOML config; everything derived
from it (instances, orderings, per-trial seeds) is a pure function of the
master seed, so identical configs reproduce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .ansatz import (
    BETA_RANGE,
    GAMMA_RANGE,
    AngleVector,
    AnsatzSpec,
    GateOrdering,
    build_circuit,
    equivalent_standard_depth,
)
from .gates import count_gates
from .ising import (
    ENUMERATION_LIMIT,
    OracleUnavailableError,
    SKInstance,
    SpectrumSummary,
    exact_spectrum,
    generate_sk,
    load_instance,
    save_instance,
    search_bitflips,
)
from .metrics import TAIL_GRID, random_baseline, renormalized_ratio, spread_analysis, tail_curve
from .optimize import Study, best_trial_index
from .simulator import NoiseModel
from .study import (
    EvalContext,
    StudyConfig,
    attractor_scan,
    per_ordering_best_ars,
    read_trials_jsonl,
    replay_trial_energies,
    run_study,
    write_trials_jsonl,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_ORACLE_UNAVAILABLE = 3

_SEED_MASK = (1 << 64) - 1

# Stream tags for seed derivation; fixed so outputs are reproducible.
_TAG_INSTANCE = 1
_TAG_ORDERINGS = 2
_TAG_STUDY = 3
_TAG_BASELINE = 4
_TAG_TAILS = 5
_TAG_ATTRACTOR = 6


class ConfigError(Exception):
    """Invalid configuration; the message names the offending field."""


def derive_seed(master: int, *tags: int) -> int:
    seq = np.random.SeedSequence([master & _SEED_MASK, *tags])
    return int(seq.generate_state(1, np.uint64)[0])


def _require(table: dict, key: str, kind, where: str):
    if key not in table:
        raise ConfigError(f"missing required field {where}.{key}")
    return _convert(table[key], key, kind, where)


def _optional(table: dict, key: str, kind, where: str, default):
    if key not in table:
        return default
    return _convert(table[key], key, kind, where)


def _convert(value, key: str, kind, where: str):
    try:
        if kind is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError
            return value
        if kind is float:
            return float(value)
        if kind is str:
            if not isinstance(value, str):
                raise TypeError
            return value
        if kind == "int_list":
            return [_convert(v, key, int, where) for v in list(value)]
        if kind == "str_list":
            return [_convert(v, key, str, where) for v in list(value)]
        if kind == "range":
            lo, hi = (float(v) for v in value)
            if not lo < hi:
                raise TypeError
            return (lo, hi)
    except (TypeError, ValueError):
        pass
    raise ConfigError(f"field {where}.{key} has invalid value {value!r}")


@dataclass
class RunSetup:
    name: str
    seed: int
    base: str
    k_list: list[int]
    p_list: list[int]
    strategy: str
    angle_sets: int
    num_orderings: int
    total_trials: int | None
    gamma_range: tuple[float, float]
    beta_range: tuple[float, float]
    tpe_batch: int
    shots: int
    noise: NoiseModel
    out_root: Path
    baseline_reps: int | None
    instance_n: int | None
    instance_count: int
    instance_files: list[str]
    attractor: dict
    raw: dict

    @property
    def study_dir(self) -> Path:
        return self.out_root / self.name

    def trials_per_study(self) -> int:
        if self.strategy == "random":
            return self.angle_sets * self.num_orderings
        return self.total_trials


def load_config(path: str | Path) -> RunSetup:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    try:
        raw = tomllib.loads(path.read_text())
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config is not valid TOML: {exc}") from exc

    name = _require(raw, "name", str, "config")
    seed = _require(raw, "seed", int, "config")

    instance = raw.get("instance", {})
    files = _optional(instance, "files", "str_list", "instance", [])
    n = _optional(instance, "n", int, "instance", None)
    count = _optional(instance, "count", int, "instance", 1)
    if not files:
        if n is None:
            raise ConfigError("missing required field instance.n (or instance.files)")
        if n < 2:
            raise ConfigError("field instance.n must be at least 2")
        if count < 1:
            raise ConfigError("field instance.count must be positive")

    ansatz = raw.get("ansatz", {})
    base = _require(ansatz, "base", str, "ansatz")
    if base not in ("qaoa", "qampa"):
        raise ConfigError(f"field ansatz.base must be qaoa or qampa, got {base!r}")
    k_list = _require(ansatz, "k", "int_list", "ansatz")
    p_list = _require(ansatz, "p", "int_list", "ansatz")
    if not k_list or any(k < 1 for k in k_list):
        raise ConfigError("field ansatz.k must be a non-empty list of positive integers")
    if not p_list or any(p < 1 for p in p_list):
        raise ConfigError("field ansatz.p must be a non-empty list of positive integers")

    strategy = raw.get("strategy", {})
    kind = _optional(strategy, "kind", str, "strategy", "random")
    if kind not in ("random", "tpe"):
        raise ConfigError(f"field strategy.kind must be random or tpe, got {kind!r}")
    angle_sets = _optional(strategy, "angle_sets", int, "strategy", 100)
    num_orderings = _optional(strategy, "orderings", int, "strategy", 10)
    total_trials = _optional(strategy, "total_trials", int, "strategy", None)
    if kind == "tpe" and (total_trials is None or total_trials < 1):
        raise ConfigError("field strategy.total_trials is required for the tpe strategy")
    if angle_sets < 1 or num_orderings < 1:
        raise ConfigError("fields strategy.angle_sets and strategy.orderings must be positive")
    gamma_range = _optional(strategy, "gamma_range", "range", "strategy", GAMMA_RANGE)
    beta_range = _optional(strategy, "beta_range", "range", "strategy", BETA_RANGE)
    tpe_batch = _optional(strategy, "tpe_batch", int, "strategy", 1)

    sampling = raw.get("sampling", {})
    shots = _optional(sampling, "shots", int, "sampling", 1000)
    if shots < 1:
        raise ConfigError("field sampling.shots must be positive")

    noise_table = raw.get("noise", {})
    try:
        noise = NoiseModel(
            amp_damping_per_2q=_optional(noise_table, "amp_damping_per_2q", float, "noise", 0.0),
            depolarizing_per_2q=_optional(noise_table, "depolarizing_per_2q", float, "noise", 0.0),
            readout_flip_01=_optional(noise_table, "readout_flip_01", float, "noise", 0.0),
            readout_flip_10=_optional(noise_table, "readout_flip_10", float, "noise", 0.0),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid noise section: {exc}") from exc

    output = raw.get("output", {})
    out_root = Path(_optional(output, "dir", str, "output", "out"))
    baseline = raw.get("baseline", {})
    baseline_reps = _optional(baseline, "reps", int, "baseline", None)

    return RunSetup(
        name=name,
        seed=seed,
        base=base,
        k_list=k_list,
        p_list=p_list,
        strategy=kind,
        angle_sets=angle_sets,
        num_orderings=num_orderings,
        total_trials=total_trials,
        gamma_range=gamma_range,
        beta_range=beta_range,
        tpe_batch=tpe_batch,
        shots=shots,
        noise=noise,
        out_root=out_root,
        baseline_reps=baseline_reps,
        instance_n=n,
        instance_count=count,
        instance_files=files,
        attractor=raw.get("attractor", {}),
        raw=raw,
    )


def resolve_instances(setup: RunSetup) -> list[tuple[SKInstance, SpectrumSummary | None]]:
    if setup.instance_files:
        return [load_instance(f) for f in setup.instance_files]
    out = []
    for idx in range(setup.instance_count):
        inst = generate_sk(setup.instance_n, derive_seed(setup.seed, _TAG_INSTANCE, idx))
        spectrum = exact_spectrum(inst) if inst.n <= ENUMERATION_LIMIT else None
        out.append((inst, spectrum))
    return out


def resolve_orderings(setup: RunSetup, n: int) -> tuple[GateOrdering, ...]:
    rng = np.random.default_rng(derive_seed(setup.seed, _TAG_ORDERINGS))
    return tuple(GateOrdering.random(n, rng) for _ in range(setup.num_orderings))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)] + [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def _study_config(setup: RunSetup, instance, spectrum, k: int, p: int, idx: int, workers: int) -> StudyConfig:
    orderings = resolve_orderings(setup, instance.n)
    return StudyConfig(
        instance=instance,
        spec=AnsatzSpec(base=setup.base, n=instance.n, k=k, p=p),
        orderings=orderings,
        strategy=setup.strategy,
        num_angle_sets=setup.angle_sets,
        num_orderings_used=setup.num_orderings,
        total_trials=setup.total_trials,
        shots=setup.shots,
        noise=setup.noise,
        seed=derive_seed(setup.seed, _TAG_STUDY, idx, k, p),
        c_min=None if spectrum is None else spectrum.c_min,
        workers=workers,
        gamma_range=setup.gamma_range,
        beta_range=setup.beta_range,
        tpe_batch=setup.tpe_batch,
    )


def _summary_row(setup: RunSetup, idx: int, instance, spectrum, k: int, p: int, study: Study) -> list:
    spec = AnsatzSpec(base=setup.base, n=instance.n, k=k, p=p)
    probe_angles = np.zeros(2 * p)
    circuit, _ = build_circuit(
        instance, spec, GateOrdering.identity(instance.n), AngleVector.from_array(probe_angles)
    )
    two_qubit = count_gates(circuit).two_qubit
    best_ar = study.best.ar
    go_bests = per_ordering_best_ars(study)
    mean_go_best = None if go_bests is None else float(np.mean(go_bests))
    baseline_best = None
    if spectrum is not None:
        reps = setup.baseline_reps or setup.trials_per_study()
        baseline = random_baseline(
            instance, s=setup.shots, reps=reps,
            seed=derive_seed(setup.seed, _TAG_BASELINE, idx, k, p), c_min=spectrum.c_min,
        )
        baseline_best = baseline.best_ar
    return [
        idx, instance.n, k, p, equivalent_standard_depth(spec), two_qubit,
        best_ar, mean_go_best, baseline_best,
    ]


_SUMMARY_HEADER = [
    "instance", "n", "k", "p", "depth_fraction", "two_qubit_gates",
    "best_ar", "mean_go_best_ar", "baseline_best_ar",
]


def cmd_generate(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.n < 2:
        raise ConfigError("--n must be at least 2")
    if args.count < 0:
        raise ConfigError("--count must be non-negative")
    for idx in range(args.count):
        inst = generate_sk(args.n, derive_seed(args.seed, _TAG_INSTANCE, idx))
        spectrum = exact_spectrum(inst) if args.n <= ENUMERATION_LIMIT else None
        save_instance(out_dir / f"sk_n{args.n}_i{idx}.json", inst, spectrum)
    print(f"wrote {args.count} instance file(s) to {out_dir}")
    return EXIT_OK


def cmd_run(args) -> int:
    setup = load_config(args.config)
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    instances = resolve_instances(setup)
    study_dir = setup.study_dir
    study_dir.mkdir(parents=True, exist_ok=True)

    summary_rows = []
    for idx, (instance, spectrum) in enumerate(instances):
        inst_dir = study_dir / f"instance_{idx}"
        inst_dir.mkdir(parents=True, exist_ok=True)
        save_instance(inst_dir / "instance.json", instance, spectrum)
        for k in setup.k_list:
            for p in setup.p_list:
                config = _study_config(setup, instance, spectrum, k, p, idx, workers)
                study = run_study(config)
                write_trials_jsonl(study, p, inst_dir / f"k{k}_p{p}.jsonl")
                summary_rows.append(_summary_row(setup, idx, instance, spectrum, k, p, study))
    _write_csv(study_dir / "summary.csv", _SUMMARY_HEADER, summary_rows)
    print(f"study complete: {len(summary_rows)} summary row(s) in {study_dir / 'summary.csv'}")
    return EXIT_OK


def _load_study_inputs(setup: RunSetup):
    """Load instances and spectra saved by cmd_run; spectra are required."""
    study_dir = setup.study_dir
    if not study_dir.exists():
        raise ConfigError(f"study directory {study_dir} does not exist; run `run` first")
    out = []
    idx = 0
    while (study_dir / f"instance_{idx}").exists():
        instance, spectrum = load_instance(study_dir / f"instance_{idx}" / "instance.json")
        if spectrum is None:
            raise OracleUnavailableError(
                f"instance_{idx} has no recorded spectrum; tails/spread/attractor need c_min"
            )
        out.append((instance, spectrum))
        idx += 1
    if not out:
        raise ConfigError(f"no instance_* directories under {study_dir}")
    return out


def _depth_cells(setup: RunSetup, n: int, min_depth: float, max_depth: float):
    for k in setup.k_list:
        for p in setup.p_list:
            depth = p * k / n
            if min_depth <= depth <= max_depth:
                yield k, p


def cmd_tails(args) -> int:
    setup = load_config(args.config)
    instances = _load_study_inputs(setup)
    # log-spaced tail sizes, always including s itself (where the tail
    # estimator reduces to the standard one)
    grid = sorted({s for s in TAIL_GRID if s <= setup.shots} | {setup.shots})
    per_cell: list[list[float]] = []
    for idx, (instance, spectrum) in enumerate(instances):
        orderings = resolve_orderings(setup, instance.n)
        for k, p in _depth_cells(setup, instance.n, args.min_depth, args.max_depth):
            log_path = setup.study_dir / f"instance_{idx}" / f"k{k}_p{p}.jsonl"
            if not log_path.exists():
                raise ConfigError(f"missing trial log {log_path}")
            study = read_trials_jsonl(log_path)
            ctx = EvalContext(
                instance=instance,
                spec=AnsatzSpec(base=setup.base, n=instance.n, k=k, p=p),
                orderings=orderings,
                shots=setup.shots,
                noise=setup.noise,
                c_min=spectrum.c_min,
            )
            samples = replay_trial_energies(ctx, study.best)
            exp_curve = dict(tail_curve(samples, spectrum.c_min, grid))
            baseline = random_baseline(
                instance, s=setup.shots, reps=args.baseline_reps,
                seed=derive_seed(setup.seed, _TAG_TAILS, idx, k, p),
                c_min=spectrum.c_min, grid=grid,
            )
            base_curve = dict(baseline.tail_curve)
            # a saturated baseline (every repetition found the optimum, so
            # r_random = 1) leaves nothing to renormalize against; such grid
            # points only occur at desk scale and are reported empty
            per_cell.append(
                [
                    np.nan if base_curve[s] >= 1.0 - 1e-12
                    else renormalized_ratio(exp_curve[s], base_curve[s])
                    for s in grid
                ]
            )
    if not per_cell:
        raise ConfigError("no studies fall inside the requested depth window")
    values = np.array(per_cell)
    rows = []
    for col, s_tilde in enumerate(grid):
        defined = values[:, col][np.isfinite(values[:, col])]
        if defined.size == 0:
            rows.append([s_tilde, None, None])
            continue
        mean = float(defined.mean())
        stderr = float(defined.std(ddof=0) / np.sqrt(defined.size))
        rows.append([s_tilde, mean, stderr])
    out_path = Path(args.out) if args.out else setup.study_dir / "tails.csv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    _write_csv(out_path, ["s_tilde", "mean_renormalized_ar", "stderr"], rows)
    print(f"wrote tail curve ({values.shape[0]} cell(s)) to {out_path}")
    return EXIT_OK


def cmd_attractor(args) -> int:
    setup = load_config(args.config)
    table = setup.attractor
    where = "attractor"
    num_random = _optional(table, "num_random_masks", int, where, 200)
    num_selected = _optional(table, "num_masks", int, where, 11)
    angle_sets = _optional(table, "angle_sets", int, where, setup.angle_sets)
    orderings_used = _optional(table, "orderings_used", int, where, setup.num_orderings)
    shots = _optional(table, "shots", int, where, setup.shots)
    k = _optional(table, "k", int, where, setup.k_list[0])
    p = _optional(table, "p", int, where, setup.p_list[0])
    if num_selected < 2:
        raise ConfigError("field attractor.num_masks must be at least 2")

    instance, spectrum = resolve_instances(setup)[0]
    if spectrum is None:
        raise OracleUnavailableError("attractor scan needs the exact ground energy")
    ranked = search_bitflips(
        instance, num_random, seed=derive_seed(setup.seed, _TAG_ATTRACTOR),
        spectrum=spectrum,
    )
    picks = np.unique(np.linspace(0, len(ranked) - 1, num_selected).round().astype(int))
    masks = [ranked[i][0] for i in picks]
    orderings = resolve_orderings(setup, instance.n)[:orderings_used]
    rows = attractor_scan(
        instance, spectrum, masks,
        AnsatzSpec(base=setup.base, n=instance.n, k=k, p=p),
        setup.noise, orderings, angle_sets, len(orderings), shots,
        seed=derive_seed(setup.seed, _TAG_ATTRACTOR, k, p),
    )
    out_path = Path(args.out) if args.out else setup.study_dir / "attractor.csv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    _write_csv(out_path, ["mask", "r0", "best_ar"], [[r.mask, r.r0, r.best_ar] for r in rows])
    print(f"wrote attractor table ({len(rows)} mask(s)) to {out_path}")
    return EXIT_OK


def cmd_spread(args) -> int:
    setup = load_config(args.config)
    if setup.strategy != "random":
        raise ConfigError("spread analysis needs the Cartesian random strategy")
    instances = _load_study_inputs(setup)
    rows = []
    for k in setup.k_list:
        for p in setup.p_list:
            per_instance = []
            for idx in range(len(instances)):
                log_path = setup.study_dir / f"instance_{idx}" / f"k{k}_p{p}.jsonl"
                if not log_path.exists():
                    raise ConfigError(f"missing trial log {log_path}")
                study = read_trials_jsonl(log_path)
                if any(t.ar is None for t in study.trials):
                    raise OracleUnavailableError("spread analysis needs AR values in the logs")
                grid = np.full((setup.num_orderings, setup.angle_sets), np.nan)
                for t in study.trials:
                    a, o = divmod(t.trial_index, setup.num_orderings)
                    grid[o, a] = t.ar
                per_instance.append(spread_analysis(grid))
            rows.append([
                k, p,
                float(np.mean([s.delta_max_over_orderings for s in per_instance])),
                float(np.mean([s.delta_max_over_angles for s in per_instance])),
            ])
    out_path = Path(args.out) if args.out else setup.study_dir / "spread.csv"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    _write_csv(
        out_path,
        ["k", "p", "delta_max_over_orderings", "delta_max_over_angles"],
        rows,
    )
    print(f"wrote spread table ({len(rows)} row(s)) to {out_path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    setup = load_config(args.config)
    instances = _load_study_inputs_allow_missing_spectrum(setup)
    summary_path = setup.study_dir / "summary.csv"
    if not summary_path.exists():
        raise ConfigError(f"missing summary file {summary_path}")
    rows = []
    for idx, (instance, spectrum) in enumerate(instances):
        for k in setup.k_list:
            for p in setup.p_list:
                log_path = setup.study_dir / f"instance_{idx}" / f"k{k}_p{p}.jsonl"
                if not log_path.exists():
                    print(f"verify: missing trial log {log_path}")
                    return EXIT_VERIFY_FAILED
                study = read_trials_jsonl(log_path)
                if study.best_index != best_trial_index(study.trials):
                    print(f"verify: best-trial tie-break violated in {log_path}")
                    return EXIT_VERIFY_FAILED
                expected = setup.trials_per_study()
                if len(study.trials) != expected:
                    print(f"verify: {log_path} has {len(study.trials)} trials, expected {expected}")
                    return EXIT_VERIFY_FAILED
                rows.append(_summary_row(setup, idx, instance, spectrum, k, p, study))
    recomputed = "\n".join(
        [",".join(_SUMMARY_HEADER)] + [",".join(_fmt(v) for v in row) for row in rows]
    ) + "\n"
    actual = summary_path.read_text()
    if recomputed != actual:
        print("verify: summary.csv does not match a recomputation from the logs")
        return EXIT_VERIFY_FAILED
    print("verify: summary matches the trial logs")
    return EXIT_OK


def _load_study_inputs_allow_missing_spectrum(setup: RunSetup):
    study_dir = setup.study_dir
    if not study_dir.exists():
        raise ConfigError(f"study directory {study_dir} does not exist; run `run` first")
    out = []
    idx = 0
    while (study_dir / f"instance_{idx}").exists():
        out.append(load_instance(study_dir / f"instance_{idx}" / "instance.json"))
        idx += 1
    if not out:
        raise ConfigError(f"no instance_* directories under {study_dir}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tbvqa",
        description="Time-block QAOA/QAMPA study runner for Sherrington-Kirkpatrick instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write SK instance files with exact spectra")
    gen.add_argument("--n", type=int, required=True, help="qubit count (n >= 2)")
    gen.add_argument("--count", type=int, default=10, help="number of instances (default 10)")
    gen.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    gen.add_argument("--out-dir", default="instances", help="output directory (default instances/)")
    gen.set_defaults(func=cmd_generate)

    run = sub.add_parser("run", help="run the configured studies and write logs + summary.csv")
    run.add_argument("--config", required=True, help="TOML study configuration")
    run.add_argument("--workers", type=int, default=0,
                     help="worker processes for trial evaluation (default: all cores)")
    run.set_defaults(func=cmd_run)

    tails = sub.add_parser("tails", help="renormalized tail curve from a finished study")
    tails.add_argument("--config", required=True)
    tails.add_argument("--min-depth", type=float, default=1.0,
                       help="lower bound on depth fraction p*k/n (default 1.0)")
    tails.add_argument("--max-depth", type=float, default=2.0,
                       help="upper bound on depth fraction p*k/n (default 2.0)")
    tails.add_argument("--baseline-reps", type=int, default=100,
                       help="uniform-baseline repetitions to average (default 100)")
    tails.add_argument("--out", default=None, help="output CSV (default <study>/tails.csv)")
    tails.set_defaults(func=cmd_tails)

    attractor = sub.add_parser("attractor", help="bitflip-transform scan: r0 vs best AR")
    attractor.add_argument("--config", required=True)
    attractor.add_argument("--out", default=None, help="output CSV (default <study>/attractor.csv)")
    attractor.set_defaults(func=cmd_attractor)

    spread = sub.add_parser("spread", help="ordering-vs-angle spread tables from a finished study")
    spread.add_argument("--config", required=True)
    spread.add_argument("--out", default=None, help="output CSV (default <study>/spread.csv)")
    spread.set_defaults(func=cmd_spread)

    verify = sub.add_parser("verify", help="recompute summary.csv from the logs and diff")
    verify.add_argument("--config", required=True)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OracleUnavailableError as exc:
        print(f"oracle unavailable: {exc}", file=sys.stderr)
        return EXIT_ORACLE_UNAVAILABLE


if __name__ == "__main__":
    raise SystemExit(main())
