"""Parameter-setting strategies over continuous angles plus a categorical
gate-ordering variable: Cartesian random search and a Tree-of-Parzen-
Estimators optimizer.

The TPE here is self-contained so studies are reproducible without any
external optimizer package. Fixed choices: 10 startup trials, good/bad split
at the 0.25 quantile of the objective, 24 candidate draws per suggestion,
per-observation bandwidths from neighbor distances floored at 1% of the range
(kernels truncated at the range boundaries), and Laplace-smoothed categorical
frequencies with pseudo-count 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import ndtr, ndtri

from .ansatz import BETA_RANGE, GAMMA_RANGE, GateOrdering

_SEED_MASK = (1 << 64) - 1

TPE_STARTUP_TRIALS = 10
TPE_SPLIT_QUANTILE = 0.25
TPE_CANDIDATES = 24
TPE_BANDWIDTH_FLOOR = 0.01
TPE_PSEUDO_COUNT = 1.0


class TrialEvaluationError(RuntimeError):
    """An objective evaluation failed; carries the failing trial's coordinates."""

    def __init__(self, trial_index: int, ordering_index: int, params: Sequence[float]):
        self.trial_index = trial_index
        self.ordering_index = ordering_index
        self.params = tuple(params)
        super().__init__(
            f"evaluation failed at trial {trial_index} "
            f"(ordering {ordering_index}, params {self.params})"
        )


@dataclass(frozen=True)
class SearchSpace:
    """Continuous dimensions with ranges plus a categorical ordering variable."""

    dims: tuple[tuple[float, float], ...]
    num_orderings: int
    orderings: tuple[GateOrdering, ...] | None = None

    def __post_init__(self) -> None:
        if self.num_orderings < 1:
            raise ValueError("need at least one ordering")
        for lo, hi in self.dims:
            if not (lo <= hi) or not math.isfinite(lo) or not math.isfinite(hi):
                raise ValueError(f"invalid range ({lo}, {hi})")
        if self.orderings is not None and len(self.orderings) != self.num_orderings:
            raise ValueError("orderings list does not match num_orderings")

    @classmethod
    def for_angles(
        cls,
        p: int,
        orderings: Sequence[GateOrdering],
        gamma_range: tuple[float, float] = GAMMA_RANGE,
        beta_range: tuple[float, float] = BETA_RANGE,
    ) -> "SearchSpace":
        """2p dimensions: p phase angles then p mixer angles."""
        return cls(
            dims=(gamma_range,) * p + (beta_range,) * p,
            num_orderings=len(orderings),
            orderings=tuple(orderings),
        )

    def uniform_params(self, rng: np.random.Generator) -> np.ndarray:
        lows = np.array([lo for lo, _ in self.dims])
        highs = np.array([hi for _, hi in self.dims])
        return lows + rng.random(len(self.dims)) * (highs - lows)


@dataclass(frozen=True)
class Trial:
    trial_index: int
    params: tuple[float, ...]
    ordering_index: int
    objective: float
    ar: float | None
    seed: int


@dataclass
class Study:
    trials: list[Trial]
    best_index: int

    @property
    def best(self) -> Trial:
        return self.trials[self.best_index]


def best_trial_index(trials: Sequence[Trial]) -> int:
    """Lowest objective wins; ties break toward the smaller trial index."""
    if not trials:
        raise ValueError("cannot pick a best trial from an empty study")
    return min(range(len(trials)), key=lambda i: (trials[i].objective, trials[i].trial_index))


def derive_trial_seed(master_seed: int, trial_index: int) -> int:
    seq = np.random.SeedSequence([master_seed & _SEED_MASK, trial_index])
    return int(seq.generate_state(1, np.uint64)[0])


def _normalize_outcome(outcome) -> tuple[float, float | None]:
    if isinstance(outcome, tuple):
        objective, ar = outcome
        return float(objective), (None if ar is None else float(ar))
    return float(outcome), None


EvalFn = Callable[[np.ndarray, int, int], object]


def _run_eval(eval_fn: EvalFn, trial_index: int, params: np.ndarray, ordering_index: int, seed: int):
    try:
        return _normalize_outcome(eval_fn(params, ordering_index, seed))
    except Exception as exc:
        raise TrialEvaluationError(trial_index, ordering_index, params) from exc


def random_search(
    space: SearchSpace,
    num_angle_sets: int,
    num_orderings_used: int,
    eval_fn: EvalFn,
    seed: int,
    eval_batch: Callable[[list[tuple[np.ndarray, int, int]]], list] | None = None,
) -> Study:
    """Cartesian product search: every drawn angle set runs under every ordering.

    Trials are laid out angle-major (trial a*O + o pairs angle set a with
    ordering o), each with a seed derived from the study seed and its index,
    so results do not depend on evaluation scheduling. ``eval_batch``, when
    given, evaluates the pre-built task list (e.g. on a worker pool) and must
    preserve order.
    """
    if num_angle_sets < 1 or num_orderings_used < 1:
        raise ValueError("budgets must be positive")
    if num_orderings_used > space.num_orderings:
        raise ValueError("cannot use more orderings than the space provides")
    rng = np.random.default_rng(seed & _SEED_MASK)
    angle_sets = [space.uniform_params(rng) for _ in range(num_angle_sets)]

    tasks = []
    for a in range(num_angle_sets):
        for o in range(num_orderings_used):
            index = a * num_orderings_used + o
            tasks.append((angle_sets[a], o, derive_trial_seed(seed, index)))

    if eval_batch is None:
        outcomes = [
            _run_eval(eval_fn, i, params, o, t_seed)
            for i, (params, o, t_seed) in enumerate(tasks)
        ]
    else:
        outcomes = [_normalize_outcome(out) for out in eval_batch(tasks)]

    trials = [
        Trial(
            trial_index=i,
            params=tuple(float(v) for v in params),
            ordering_index=o,
            objective=objective,
            ar=ar,
            seed=t_seed,
        )
        for i, ((params, o, t_seed), (objective, ar)) in enumerate(zip(tasks, outcomes))
    ]
    return Study(trials=trials, best_index=best_trial_index(trials))


class _Parzen1D:
    """Truncated-Gaussian kernel mixture over one bounded dimension."""

    def __init__(self, observations: np.ndarray, lo: float, hi: float):
        self.lo = lo
        self.hi = hi
        width = hi - lo
        pts = np.sort(np.asarray(observations, dtype=float))
        if width <= 0.0:
            # Degenerate zero-width range: the dimension is a constant.
            self.pts = np.array([lo])
            self.bws = np.array([1.0])
            return
        left = np.empty_like(pts)
        right = np.empty_like(pts)
        left[0] = pts[0] - lo
        left[1:] = np.diff(pts)
        right[-1] = hi - pts[-1]
        right[:-1] = np.diff(pts)
        bw = np.maximum(left, right)
        self.pts = pts
        self.bws = np.clip(bw, TPE_BANDWIDTH_FLOOR * width, width)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.hi <= self.lo:
            return np.full(size, self.lo)
        which = rng.integers(0, len(self.pts), size=size)
        mu = self.pts[which]
        sigma = self.bws[which]
        cdf_lo = ndtr((self.lo - mu) / sigma)
        cdf_hi = ndtr((self.hi - mu) / sigma)
        u = cdf_lo + rng.random(size) * (cdf_hi - cdf_lo)
        return np.clip(mu + sigma * ndtri(u), self.lo, self.hi)

    def logpdf(self, x: np.ndarray) -> np.ndarray:
        if self.hi <= self.lo:
            return np.zeros_like(np.asarray(x, dtype=float))
        z = (x[:, None] - self.pts[None, :]) / self.bws[None, :]
        norm = ndtr((self.hi - self.pts) / self.bws) - ndtr((self.lo - self.pts) / self.bws)
        dens = np.exp(-0.5 * z**2) / (np.sqrt(2.0 * np.pi) * self.bws[None, :] * norm[None, :])
        return np.log(dens.mean(axis=1) + 1e-300)


def _categorical_probs(indices: Sequence[int], num_categories: int) -> np.ndarray:
    counts = np.bincount(list(indices), minlength=num_categories).astype(float)
    counts += TPE_PSEUDO_COUNT
    return counts / counts.sum()


def tpe_suggest(
    history: Sequence[Trial],
    space: SearchSpace,
    rng: np.random.Generator,
) -> tuple[np.ndarray, int]:
    """Suggest the next (params, ordering_index) point.

    Below the startup budget this is a uniform draw. Afterwards the history
    splits at the objective quantile into good/bad sets; candidates are drawn
    from the good model and scored by the good/bad density ratio, treating
    dimensions independently.
    """
    if len(history) < TPE_STARTUP_TRIALS or len(history) < 2:
        return space.uniform_params(rng), int(rng.integers(0, space.num_orderings))

    order = sorted(range(len(history)), key=lambda i: (history[i].objective, history[i].trial_index))
    n_good = max(1, math.ceil(TPE_SPLIT_QUANTILE * len(history)))
    n_good = min(n_good, len(history) - 1)
    good = [history[i] for i in order[:n_good]]
    bad = [history[i] for i in order[n_good:]]

    good_params = np.array([t.params for t in good], dtype=float)
    bad_params = np.array([t.params for t in bad], dtype=float)
    candidates = np.empty((TPE_CANDIDATES, len(space.dims)))
    score = np.zeros(TPE_CANDIDATES)
    for d, (lo, hi) in enumerate(space.dims):
        good_model = _Parzen1D(good_params[:, d], lo, hi)
        bad_model = _Parzen1D(bad_params[:, d], lo, hi)
        candidates[:, d] = good_model.sample(rng, TPE_CANDIDATES)
        score += good_model.logpdf(candidates[:, d]) - bad_model.logpdf(candidates[:, d])

    good_cat = _categorical_probs([t.ordering_index for t in good], space.num_orderings)
    bad_cat = _categorical_probs([t.ordering_index for t in bad], space.num_orderings)
    cand_cat = rng.choice(space.num_orderings, size=TPE_CANDIDATES, p=good_cat)
    score += np.log(good_cat[cand_cat]) - np.log(bad_cat[cand_cat])

    best = int(np.argmax(score))
    return candidates[best].copy(), int(cand_cat[best])


def tpe_search(
    space: SearchSpace,
    budget: int,
    eval_fn: EvalFn,
    seed: int,
    batch_size: int = 1,
    initial_params: Sequence[float] | None = None,
    initial_ordering: int = 0,
) -> Study:
    """Sequential TPE study; optional fixed first point.

    ``batch_size`` > 1 drafts several suggestions before evaluating, imputing
    the pending ones at the median observed objective (constant-liar), which
    is what a concurrent evaluator would see.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    rng = np.random.default_rng(np.random.SeedSequence([seed & _SEED_MASK, 0x7BE]))
    trials: list[Trial] = []
    while len(trials) < budget:
        batch = min(batch_size, budget - len(trials))
        pending: list[Trial] = []
        suggestions: list[tuple[np.ndarray, int]] = []
        liar = float(np.median([t.objective for t in trials])) if trials else 0.0
        for _ in range(batch):
            if not trials and not pending and initial_params is not None:
                params = np.asarray(initial_params, dtype=float)
                ordering_index = initial_ordering
            else:
                params, ordering_index = tpe_suggest(trials + pending, space, rng)
            suggestions.append((params, ordering_index))
            pending.append(
                Trial(
                    trial_index=len(trials) + len(pending),
                    params=tuple(float(v) for v in params),
                    ordering_index=ordering_index,
                    objective=liar,
                    ar=None,
                    seed=0,
                )
            )
        for params, ordering_index in suggestions:
            index = len(trials)
            t_seed = derive_trial_seed(seed, index)
            objective, ar = _run_eval(eval_fn, index, params, ordering_index, t_seed)
            trials.append(
                Trial(
                    trial_index=index,
                    params=tuple(float(v) for v in params),
                    ordering_index=ordering_index,
                    objective=objective,
                    ar=ar,
                    seed=t_seed,
                )
            )
    return Study(trials=trials, best_index=best_trial_index(trials))
