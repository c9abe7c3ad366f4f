"""Study orchestration: one trial = build the circuit for a parameter point,
simulate s shots, and score the unpermuted energies.

Per-trial seeds are derived from the study seed and the trial index, so a
study's log is byte-identical however its trials are scheduled.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ansatz import BETA_RANGE, GAMMA_RANGE, AngleVector, AnsatzSpec, GateOrdering, build_circuit
from .ising import BitflipMask, SKInstance, SpectrumSummary, apply_bitflip, zero_state_ratio
from .metrics import approx_ratio, energies_from_shots, sample_mean
from .optimize import SearchSpace, Study, Trial, random_search, tpe_search
from .simulator import NoiseModel, run_noisy

TPE_INITIAL_ANGLE = 0.1


@dataclass(frozen=True)
class EvalContext:
    """Everything a worker needs to score one parameter point."""

    instance: SKInstance
    spec: AnsatzSpec
    orderings: tuple[GateOrdering, ...]
    shots: int
    noise: NoiseModel
    c_min: int | None


def evaluate_trial(ctx: EvalContext, params, ordering_index: int, seed: int) -> tuple[float, float | None]:
    """Mean sampled energy (the minimized objective) and its approximation ratio."""
    angles = AngleVector.from_array(params)
    circuit, _ = build_circuit(ctx.instance, ctx.spec, ctx.orderings[ordering_index], angles)
    shots = run_noisy(circuit, ctx.noise, ctx.shots, seed)
    samples = energies_from_shots(ctx.instance, shots, circuit.qubit_map)
    objective = sample_mean(samples)
    ar = approx_ratio(objective, ctx.c_min) if ctx.c_min is not None else None
    return objective, ar


def replay_trial_energies(ctx: EvalContext, trial: Trial):
    """Re-simulate a logged trial; deterministic, so the energies are exact."""
    angles = AngleVector.from_array(trial.params)
    circuit, _ = build_circuit(ctx.instance, ctx.spec, ctx.orderings[trial.ordering_index], angles)
    shots = run_noisy(circuit, ctx.noise, ctx.shots, trial.seed)
    return energies_from_shots(ctx.instance, shots, circuit.qubit_map)


_WORKER_CTX: EvalContext | None = None


def _init_worker(ctx: EvalContext) -> None:
    global _WORKER_CTX
    _WORKER_CTX = ctx


def _eval_task(task) -> tuple[float, float | None]:
    params, ordering_index, seed = task
    return evaluate_trial(_WORKER_CTX, params, ordering_index, seed)


@dataclass(frozen=True)
class StudyConfig:
    """Runtime configuration of one (instance, ansatz shape) study."""

    instance: SKInstance
    spec: AnsatzSpec
    orderings: tuple[GateOrdering, ...]
    strategy: str = "random"
    num_angle_sets: int = 100
    num_orderings_used: int | None = None
    total_trials: int | None = None
    shots: int = 1000
    noise: NoiseModel = NoiseModel()
    seed: int = 0
    c_min: int | None = None
    workers: int = 1
    gamma_range: tuple[float, float] = GAMMA_RANGE
    beta_range: tuple[float, float] = BETA_RANGE
    tpe_batch: int = 1


def run_study(config: StudyConfig) -> Study:
    """Run the configured strategy to completion and return all trials."""
    if config.strategy not in ("random", "tpe"):
        raise ValueError(f"unknown strategy {config.strategy!r}")
    if config.shots < 1:
        raise ValueError("shots must be positive")
    space = SearchSpace.for_angles(
        config.spec.p, config.orderings, config.gamma_range, config.beta_range
    )
    ctx = EvalContext(
        instance=config.instance,
        spec=config.spec,
        orderings=config.orderings,
        shots=config.shots,
        noise=config.noise,
        c_min=config.c_min,
    )

    def eval_fn(params, ordering_index, seed):
        return evaluate_trial(ctx, params, ordering_index, seed)

    if config.strategy == "random":
        num_orderings_used = config.num_orderings_used or len(config.orderings)
        eval_batch = None
        if config.workers > 1:
            def eval_batch(tasks):
                chunk = max(1, len(tasks) // (config.workers * 4))
                with ProcessPoolExecutor(
                    max_workers=config.workers, initializer=_init_worker, initargs=(ctx,)
                ) as pool:
                    return list(pool.map(_eval_task, tasks, chunksize=chunk))
        return random_search(
            space, config.num_angle_sets, num_orderings_used, eval_fn, config.seed,
            eval_batch=eval_batch,
        )

    if not config.total_trials or config.total_trials < 1:
        raise ValueError("tpe strategy needs a positive total_trials budget")
    initial = np.full(2 * config.spec.p, TPE_INITIAL_ANGLE)
    return tpe_search(
        space, config.total_trials, eval_fn, config.seed,
        batch_size=config.tpe_batch, initial_params=initial, initial_ordering=0,
    )


def per_ordering_best_ars(study: Study) -> list[float] | None:
    """Best-trial AR within each ordering actually used (the dashed-line statistic)."""
    groups: dict[int, Trial] = {}
    for trial in study.trials:
        cur = groups.get(trial.ordering_index)
        if cur is None or (trial.objective, trial.trial_index) < (cur.objective, cur.trial_index):
            groups[trial.ordering_index] = trial
    bests = [groups[o] for o in sorted(groups)]
    if any(t.ar is None for t in bests):
        return None
    return [t.ar for t in bests]


def write_trials_jsonl(study: Study, p: int, path: str | Path) -> None:
    """One trial per line with a stable key order; byte-identical on re-runs."""
    lines = []
    for t in study.trials:
        record = {
            "trial_index": t.trial_index,
            "gammas": list(t.params[:p]),
            "betas": list(t.params[p:]),
            "ordering_index": t.ordering_index,
            "objective": t.objective,
            "ar": t.ar,
            "seed": t.seed,
        }
        lines.append(json.dumps(record))
    Path(path).write_text("\n".join(lines) + "\n")


def read_trials_jsonl(path: str | Path) -> Study:
    trials = []
    for line in Path(path).read_text().splitlines():
        record = json.loads(line)
        trials.append(
            Trial(
                trial_index=int(record["trial_index"]),
                params=tuple(record["gammas"]) + tuple(record["betas"]),
                ordering_index=int(record["ordering_index"]),
                objective=float(record["objective"]),
                ar=None if record["ar"] is None else float(record["ar"]),
                seed=int(record["seed"]),
            )
        )
    from .optimize import best_trial_index

    return Study(trials=trials, best_index=best_trial_index(trials))


@dataclass(frozen=True)
class AttractorRow:
    mask: str
    r0: float
    best_ar: float


def attractor_scan(
    instance: SKInstance,
    spectrum: SpectrumSummary,
    masks: list[BitflipMask],
    spec: AnsatzSpec,
    noise: NoiseModel,
    orderings: tuple[GateOrdering, ...],
    num_angle_sets: int,
    num_orderings_used: int,
    shots: int,
    seed: int,
) -> list[AttractorRow]:
    """Run one seeded random-search study per bitflip transform.

    All masks share the study seed, so they see identical angle draws and the
    comparison isolates the transform's interaction with the noise.
    """
    rows = []
    for mask in masks:
        transformed = apply_bitflip(instance, mask)
        config = StudyConfig(
            instance=transformed,
            spec=spec,
            orderings=orderings,
            strategy="random",
            num_angle_sets=num_angle_sets,
            num_orderings_used=num_orderings_used,
            shots=shots,
            noise=noise,
            seed=seed,
            c_min=spectrum.c_min,
        )
        study = run_study(config)
        rows.append(
            AttractorRow(
                mask=mask.as_string(),
                r0=zero_state_ratio(transformed, spectrum.c_min),
                best_ar=study.best.ar,
            )
        )
    return rows
