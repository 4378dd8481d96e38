"""Reproducible decoding experiments: error injection, radius sweeps with CSV
output, and the closed-form radius comparison table."""

from __future__ import annotations

import hashlib
import io
import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from ._util import as_fraction, indices_to_mask
from .decoders import (
    DecodeOutcome,
    decode_erasures,
    fixed_find_and_decode,
    flip_decode_ss,
    guess_expansion_decode_grid,
    guess_expansion_decode_poly,
    guess_flip_decode,
    scaled_guess_flip_decode,
    viderman_decode,
)
from .errors import BudgetExceeded, InvalidInput, InvalidParameters
from .graphs import BipartiteGraph, ExpanderParams
from .linear_code import Word, sample_codeword
import random

__all__ = [
    "ERROR_MODELS",
    "DECODER_NAMES",
    "inject_errors",
    "iter_error_patterns",
    "ExperimentConfig",
    "TrialResult",
    "CSV_COLUMNS",
    "trial_seed",
    "dispatch_decode",
    "run_trial",
    "sweep",
    "results_to_csv",
    "RadiiReport",
    "report_radii",
    "format_radii_table",
]

ERROR_MODELS = ("uniform-random-set", "low-expansion-greedy", "exhaustive")

DECODER_NAMES = (
    "find-erase",
    "erasure",
    "ss-flip",
    "viderman",
    "guess-flip",
    "guess-flip-scaled",
    "guess-expansion",
    "guess-expansion-grid",
)


def _greedy_low_expansion_set(g: BipartiteGraph, size: int) -> tuple[int, ...]:
    """Grow a set adding, at each step, the first vertex (ascending index)
    whose marginal new-neighbor count is minimal."""
    chosen: list[int] = []
    cur = 0
    covered = 0
    for _ in range(size):
        best_i = None
        best_gain = None
        for i in range(g.n_left):
            if (cur >> i) & 1:
                continue
            gain = (g.left_masks[i] | covered).bit_count() - covered.bit_count()
            if best_gain is None or gain < best_gain:
                best_gain, best_i = gain, i
        chosen.append(best_i)
        cur |= 1 << best_i
        covered |= g.left_masks[best_i]
    return tuple(sorted(chosen))


def inject_errors(
    g: BipartiteGraph, codeword: Word, radius: int, model: str, seed: int
) -> tuple[Word, frozenset[int]]:
    """Corrupt a codeword with a size-``radius`` error set from the model.

    uniform-random-set samples the set from the seed; low-expansion-greedy
    deterministically grows a set with few fresh neighbors (the stress case
    for collision-heavy error patterns).
    """
    if not 0 <= radius <= g.n_left:
        raise InvalidParameters(f"radius must be in [0, {g.n_left}]")
    if codeword.n != g.n_left or codeword.has_erasures:
        raise InvalidInput("codeword must be a fully known length-N word")
    if model == "uniform-random-set":
        rng = random.Random(seed)
        errs = tuple(sorted(rng.sample(range(g.n_left), radius)))
    elif model == "low-expansion-greedy":
        errs = _greedy_low_expansion_set(g, radius)
    else:
        raise InvalidParameters(
            f"unknown model {model!r} (exhaustive patterns come from iter_error_patterns)"
        )
    return (
        Word(g.n_left, codeword.bits ^ indices_to_mask(errs)),
        frozenset(errs),
    )


def iter_error_patterns(
    n: int, radius: int, budget: int = 1 << 26
) -> Iterator[tuple[int, ...]]:
    """All size-``radius`` index sets in lexicographic order."""
    cost = math.comb(n, radius)
    if cost > budget:
        raise BudgetExceeded(
            f"exhaustive model needs {cost} patterns > budget {budget}",
            required=cost,
        )
    return itertools.combinations(range(n), radius)


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: an algorithm, a radius range, and trial counts per radius.

    Per-trial randomness derives from (seed, radius, trial) so reruns are
    byte-identical; measured wall time is recorded only when ``measure_time``
    is set, otherwise the column holds 0.0 to keep the CSV reproducible.
    """

    algorithm: str
    radius_from: int
    radius_to: int
    radius_step: int = 1
    trials: int = 10
    model: str = "uniform-random-set"
    seed: int = 0
    alpha: Optional[Fraction] = None
    eps: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    eta: Optional[Fraction] = None
    slack: Fraction = Fraction(0)
    xi: Fraction = Fraction(1, 100)
    threshold_fraction: Optional[Fraction] = None
    measure_time: bool = False
    budget: int = 1 << 26

    def __post_init__(self):
        if self.algorithm not in DECODER_NAMES:
            raise InvalidParameters(f"unknown algorithm {self.algorithm!r}")
        if self.model not in ERROR_MODELS:
            raise InvalidParameters(f"unknown model {self.model!r}")
        if self.radius_from < 0 or self.radius_to < self.radius_from:
            raise InvalidParameters("need 0 <= radius_from <= radius_to")
        if self.radius_step < 1:
            raise InvalidParameters("radius_step must be >= 1")
        if self.trials < 1:
            raise InvalidParameters("trials must be >= 1")
        for name in ("alpha", "eps", "beta", "eta", "threshold_fraction"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_fraction(v))
        object.__setattr__(self, "slack", as_fraction(self.slack))
        object.__setattr__(self, "xi", as_fraction(self.xi))

    def params(self) -> ExpanderParams:
        if self.alpha is None or self.eps is None:
            raise InvalidParameters(
                f"algorithm {self.algorithm!r} needs alpha and eps"
            )
        return ExpanderParams(self.alpha, self.eps)


@dataclass(frozen=True)
class TrialResult:
    algorithm: str
    n: int
    m: int
    d: int
    alpha: Optional[Fraction]
    eps: Optional[Fraction]
    radius: int
    trial: int
    errors: int
    status: str
    recovered: bool
    iterations: int
    wall_time: float


CSV_COLUMNS = (
    "algorithm",
    "n",
    "m",
    "d",
    "alpha",
    "eps",
    "radius",
    "trial",
    "errors",
    "status",
    "recovered",
    "iterations",
    "wall_time",
)


def trial_seed(master: int, radius: int, trial: int) -> int:
    """Stable 64-bit per-trial seed derived from (master, radius, trial)."""
    digest = hashlib.sha256(f"{master}:{radius}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def dispatch_decode(cfg: ExperimentConfig, g: BipartiteGraph, word: Word) -> DecodeOutcome:
    algo = cfg.algorithm
    if algo == "erasure":
        return decode_erasures(g, word)
    if algo == "find-erase":
        return fixed_find_and_decode(g, word, cfg.params(), xi=cfg.xi)
    if algo == "ss-flip":
        tf = cfg.threshold_fraction
        if tf is None:
            if cfg.eps is None:
                raise InvalidParameters("ss-flip needs threshold_fraction or eps")
            tf = 1 - 2 * cfg.eps
        return flip_decode_ss(g, word, tf)
    if algo == "viderman":
        return viderman_decode(g, word, cfg.params(), xi=cfg.xi)
    if algo == "guess-flip":
        if cfg.beta is None:
            raise InvalidParameters("guess-flip needs beta")
        return guess_flip_decode(g, word, cfg.params(), cfg.beta, xi=cfg.xi)
    if algo == "guess-flip-scaled":
        if cfg.eta is None:
            raise InvalidParameters("guess-flip-scaled needs eta")
        return scaled_guess_flip_decode(g, word, cfg.params(), cfg.eta, xi=cfg.xi)
    if algo == "guess-expansion":
        return guess_expansion_decode_poly(g, word, cfg.params(), slack=cfg.slack)
    if algo == "guess-expansion-grid":
        if cfg.eta is None:
            raise InvalidParameters("guess-expansion-grid needs eta (eta_prime)")
        return guess_expansion_decode_grid(g, word, cfg.params(), cfg.eta)
    raise InvalidParameters(f"unknown algorithm {algo!r}")


def run_trial(
    cfg: ExperimentConfig,
    g: BipartiteGraph,
    radius: int,
    trial: int,
    errors: Iterable[int],
    seed: int,
) -> TrialResult:
    planted = sample_codeword(g, seed)
    err_mask = indices_to_mask(errors)
    if cfg.algorithm == "erasure":
        word = Word(g.n_left, planted.bits & ~err_mask, err_mask)
    else:
        word = Word(g.n_left, planted.bits ^ err_mask)
    start = time.perf_counter()
    out = dispatch_decode(cfg, g, word)
    elapsed = time.perf_counter() - start if cfg.measure_time else 0.0
    status = out.status if out.ok else f"failure:{out.reason}"
    recovered = bool(out.ok and out.word is not None and out.word.bits == planted.bits)
    return TrialResult(
        algorithm=cfg.algorithm,
        n=g.n_left,
        m=g.m_right,
        d=g.d_left,
        alpha=cfg.alpha,
        eps=cfg.eps,
        radius=radius,
        trial=trial,
        errors=err_mask.bit_count(),
        status=status,
        recovered=recovered,
        iterations=out.iterations,
        wall_time=elapsed,
    )


def sweep(cfg: ExperimentConfig, g: BipartiteGraph) -> list[TrialResult]:
    """Run the configured sweep; rows come back in (radius, trial) order."""
    if cfg.radius_to > g.n_left:
        raise InvalidParameters(
            f"radius_to {cfg.radius_to} exceeds N = {g.n_left}"
        )
    results: list[TrialResult] = []
    for radius in range(cfg.radius_from, cfg.radius_to + 1, cfg.radius_step):
        if cfg.model == "exhaustive":
            patterns = iter_error_patterns(g.n_left, radius, cfg.budget)
            for trial, errs in enumerate(patterns):
                seed = trial_seed(cfg.seed, radius, trial)
                results.append(run_trial(cfg, g, radius, trial, errs, seed))
        else:
            for trial in range(cfg.trials):
                seed = trial_seed(cfg.seed, radius, trial)
                if cfg.model == "uniform-random-set":
                    rng = random.Random(seed)
                    errs = sorted(rng.sample(range(g.n_left), radius))
                else:
                    errs = _greedy_low_expansion_set(g, radius)
                results.append(run_trial(cfg, g, radius, trial, errs, seed))
    return results


def results_to_csv(results: Iterable[TrialResult]) -> str:
    out = io.StringIO()
    out.write(",".join(CSV_COLUMNS) + "\n")
    for r in results:
        row = (
            r.algorithm,
            str(r.n),
            str(r.m),
            str(r.d),
            "" if r.alpha is None else str(r.alpha),
            "" if r.eps is None else str(r.eps),
            str(r.radius),
            str(r.trial),
            str(r.errors),
            r.status,
            "1" if r.recovered else "0",
            str(r.iterations),
            repr(r.wall_time),
        )
        out.write(",".join(row) + "\n")
    return out.getvalue()


# -- closed-form radius table --------------------------------------------------


@dataclass(frozen=True)
class RadiiReport:
    """Distance and decoding radii as fractions of N, by eps regime.

    ``new_exact`` is None exactly when the regime formula is irrational
    ((sqrt(2)-1)/(2 eps) * alpha, small-eps regime); ``new_value`` is always
    the float value. ``prior`` is the find-and-erase baseline, defined for
    eps < 1/3.
    """

    alpha: Fraction
    eps: Fraction
    distance: Fraction
    prior: Optional[Fraction]
    regime: str
    formula: str
    new_exact: Optional[Fraction]
    new_value: Optional[float]


def report_radii(alpha, eps) -> RadiiReport:
    alpha = as_fraction(alpha)
    eps = as_fraction(eps)
    if not 0 < alpha <= 1:
        raise InvalidParameters(f"alpha must be in (0, 1], got {alpha}")
    if not 0 < eps < Fraction(1, 2):
        raise InvalidParameters(f"eps must be in (0, 1/2), got {eps}")
    distance = alpha / (2 * eps)
    prior = (1 - 3 * eps) / (1 - 2 * eps) * alpha if eps < Fraction(1, 3) else None
    # eps < (3 - 2*sqrt(2))/2  <=>  (3 - 2*eps)^2 > 8, decided exactly
    t = 3 - 2 * eps
    if t * t > 8:
        regime = "eps < (3-2*sqrt(2))/2"
        formula = "(sqrt(2)-1)/(2*eps)*alpha"
        exact = None
        value = (math.sqrt(2) - 1) / (2 * float(eps)) * float(alpha)
    elif eps < Fraction(1, 8):
        regime = "(3-2*sqrt(2))/2 <= eps < 1/8"
        formula = "(1-2*eps)/(4*eps)*alpha"
        exact = (1 - 2 * eps) / (4 * eps) * alpha
        value = float(exact)
    elif eps < Fraction(1, 4):
        regime = "1/8 <= eps < 1/4"
        formula = "3/(16*eps)*alpha"
        exact = Fraction(3) / (16 * eps) * alpha
        value = float(exact)
    else:
        regime = "eps >= 1/4"
        formula = "(none)"
        exact = None
        value = None
    return RadiiReport(alpha, eps, distance, prior, regime, formula, exact, value)


def format_radii_table(report: RadiiReport) -> str:
    lines = [
        f"alpha = {report.alpha}, eps = {report.eps}  (regime: {report.regime})",
        f"  distance / N:          {report.distance} = {float(report.distance):.6g}",
    ]
    if report.prior is not None:
        lines.append(
            f"  prior radius / N:      {report.prior} = {float(report.prior):.6g}"
        )
    else:
        lines.append("  prior radius / N:      (undefined for eps >= 1/3)")
    if report.new_value is not None:
        exact = str(report.new_exact) if report.new_exact is not None else report.formula
        lines.append(f"  this-work radius / N:  {exact} = {report.new_value:.6g}")
    else:
        lines.append("  this-work radius / N:  (no improvement regime)")
    return "\n".join(lines) + "\n"
