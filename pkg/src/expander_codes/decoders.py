"""Decoding procedures: suspect finding, erasure peeling, bit flipping, and
the guess-driven decoders built on top of them.

Every decoder is a pure function of (graph, word, configuration) and returns
a DecodeOutcome. A success always carries a zero-syndrome codeword whose
distance to the input respects the decoder's validation radius; candidates
are re-checked even where theory would guarantee it. Threshold comparisons
are exact: integer counts against rational (or rational-plus-square-root)
thresholds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from ._util import as_fraction, mask_to_indices
from .errors import InvalidInput, InvalidParameters
from .graphs import BipartiteGraph, ExpanderParams
from .linear_code import Word, syndrome_bits

__all__ = [
    "FindConfig",
    "FindTrace",
    "find_suspects",
    "ErasureConfig",
    "DecodeOutcome",
    "decode_erasures",
    "fixed_find_and_decode",
    "flip_decode_ss",
    "viderman_decode",
    "FlipRoundReport",
    "flip_round",
    "GuessSchedule",
    "guess_flip_decode",
    "scaled_guess_flip_decode",
    "ExpansionGuess",
    "guess_expansion_decode_poly",
    "guess_expansion_decode_grid",
    "grid_guess_values",
]


# -- suspect finding ---------------------------------------------------------


@dataclass(frozen=True)
class FindConfig:
    """Suspect-finding threshold h = (1 - 2*delta)*D with delta = sqrt(q) + s.

    Storing the radicand keeps the eligibility test exact even for the
    square-root thresholds the guess-expansion decoders use: a vertex with
    ``count`` unsatisfied/covered checks is eligible iff count >= h, i.e.
    delta >= (D - count)/(2D), decided in rational arithmetic.
    """

    q: Fraction = Fraction(0)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q", as_fraction(self.q))
        object.__setattr__(self, "s", as_fraction(self.s))
        if self.q < 0 or self.s < 0:
            raise InvalidParameters("threshold components must be nonnegative")

    @classmethod
    def from_delta(cls, delta) -> "FindConfig":
        delta = as_fraction(delta)
        if not 0 <= delta < Fraction(1, 2):
            raise InvalidParameters(f"delta must be in [0, 1/2), got {delta}")
        return cls(Fraction(0), delta)

    @property
    def delta(self) -> float:
        return math.sqrt(self.q) + float(self.s)

    def admits(self, count: int, d: int) -> bool:
        """count >= (1 - 2*delta)*D, exactly."""
        t = Fraction(d - count, 2 * d)
        if t <= self.s:
            return True
        diff = t - self.s
        return self.q >= diff * diff

    def effective_threshold(self, d: int) -> int:
        """Smallest admitted count in [0, d]; d+1 when nothing is admitted."""
        for c in range(d + 1):
            if self.admits(c, d):
                return c
        return d + 1


@dataclass(frozen=True)
class FindTrace:
    """Result of the suspect-finding loop: L in insertion order plus R."""

    order: tuple[int, ...]
    l_mask: int
    r_mask: int
    growth: tuple[int, ...]  # |R| after each addition

    @property
    def l_set(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def r_set(self) -> frozenset[int]:
        return frozenset(mask_to_indices(self.r_mask))

    @property
    def size(self) -> int:
        return len(self.order)


def _check_plain(g: BipartiteGraph, y: Word) -> None:
    if g.d_left < 1:
        raise InvalidInput("graph has no edges")
    if y.n != g.n_left:
        raise InvalidInput(f"word length {y.n} != N = {g.n_left}")
    if y.has_erasures:
        raise InvalidInput("word must not contain erasures")


def find_suspects(
    g: BipartiteGraph,
    y: Word,
    cfg: FindConfig,
    *,
    order: str = "ascending",
    seed: Optional[int] = None,
    prefer: Optional[Sequence[int]] = None,
) -> FindTrace:
    """Grow the suspect set L: start R at the unsatisfied checks, repeatedly
    add any vertex with at least (1-2*delta)*D neighbors in R, folding its
    neighborhood into R.

    The final set L is independent of the pick order; ``order`` selects the
    tie-breaking discipline (ascending index by default, or descending, or
    seeded random) and ``prefer`` lets eligible vertices from a given set win
    ties first, which realizes the errors-first insertion order.
    """
    _check_plain(g, y)
    if order not in ("ascending", "descending", "random"):
        raise InvalidParameters(f"unknown order {order!r}")
    rng = random.Random(seed) if order == "random" else None
    pref = frozenset(prefer) if prefer is not None else frozenset()

    n, d = g.n_left, g.d_left
    left_masks = g.left_masks
    right_adj = g.right_adj
    r_mask = syndrome_bits(g, y.bits)
    counts = [(left_masks[i] & r_mask).bit_count() for i in range(n)]
    in_l = [False] * n
    pending = {i for i in range(n) if cfg.admits(counts[i], d)}

    added: list[int] = []
    growth: list[int] = []
    while pending:
        pick_from = pending & pref or pending
        if rng is not None and len(pick_from) > 1:
            i = rng.choice(sorted(pick_from))
        elif order == "descending" and not (pending & pref):
            i = max(pick_from)
        else:
            i = min(pick_from)
        pending.discard(i)
        in_l[i] = True
        added.append(i)
        new_checks = left_masks[i] & ~r_mask
        r_mask |= left_masks[i]
        growth.append(r_mask.bit_count())
        while new_checks:
            low = new_checks & -new_checks
            for u in right_adj[low.bit_length() - 1]:
                counts[u] += 1
                if not in_l[u] and cfg.admits(counts[u], d):
                    pending.add(u)
            new_checks ^= low
    return FindTrace(tuple(added), sum(1 << i for i in added), r_mask, tuple(growth))


# -- outcomes ----------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionGuess:
    """The (size, collision-density) guess a guess-expansion branch used."""

    x: Optional[Fraction]
    gamma: Optional[Fraction]
    grid_value: Optional[Fraction]
    branch: str  # "sqrt" | "plain"
    delta_radicand: Fraction
    delta_affine: Fraction

    @property
    def delta(self) -> float:
        return math.sqrt(self.delta_radicand) + float(self.delta_affine)


@dataclass(frozen=True)
class DecodeOutcome:
    """Uniform decoder result.

    A success carries the recovered codeword (zero syndrome, re-validated)
    and its Hamming distance to the input is at most ``radius`` whenever the
    decoder declared one.
    """

    algorithm: str
    status: str  # "success" | "failure"
    reason: Optional[str] = None  # no-candidate | radius-exceeded | not-a-codeword | stalled
    word: Optional[Word] = None
    radius: Optional[Fraction] = None
    corrected: int = 0
    iterations: int = 0
    flips: int = 0
    enumeration_index: Optional[tuple] = None
    path: str = ""
    guess: Optional[ExpansionGuess] = None

    @property
    def ok(self) -> bool:
        return self.status == "success"

    def __bool__(self) -> bool:
        return self.ok


# -- erasure decoding --------------------------------------------------------


@dataclass(frozen=True)
class ErasureConfig:
    """Erasure budget floor((1-xi)/(2 eps) * alpha * N) with margin xi."""

    xi: Fraction
    alpha: Fraction
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "xi", as_fraction(self.xi))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if not 0 < self.xi < 1:
            raise InvalidParameters(f"xi must be in (0, 1), got {self.xi}")

    @classmethod
    def from_params(cls, params: ExpanderParams, xi=Fraction(1, 100)) -> "ErasureConfig":
        return cls(as_fraction(xi), params.alpha, params.eps)

    def max_erasures(self, n: int) -> int:
        return math.floor((1 - self.xi) / (2 * self.eps) * self.alpha * n)


def decode_erasures(
    g: BipartiteGraph, y: Word, cfg: Optional[ErasureConfig] = None
) -> DecodeOutcome:
    """Fill erasures by peeling degree-1 checks, falling back to a GF(2)
    solve restricted to the erased columns when peeling stalls.

    Non-erased bits are trusted. Success requires a unique consistent
    completion: an inconsistent system fails as not-a-codeword, multiple
    completions fail as stalled. With a config, words beyond the erasure
    budget fail as radius-exceeded without an attempt.
    """
    if y.n != g.n_left:
        raise InvalidInput(f"word length {y.n} != N = {g.n_left}")
    algorithm = "erasure"
    erased0 = y.erasures
    n_erased = erased0.bit_count()
    cap = cfg.max_erasures(g.n_left) if cfg is not None else None
    if cap is not None and n_erased > cap:
        return DecodeOutcome(
            algorithm,
            "failure",
            reason="radius-exceeded",
            radius=Fraction(cap),
            corrected=0,
            path="capacity",
        )

    left_masks = g.left_masks
    right_masks = g.right_masks
    known = y.bits
    parity = syndrome_bits(g, known)
    erased = erased0
    counts = [(rm & erased).bit_count() for rm in right_masks]
    stack = [c for c, cnt in enumerate(counts) if cnt == 1]
    while stack:
        c = stack.pop()
        if counts[c] != 1:
            continue
        bit_mask = right_masks[c] & erased
        b = bit_mask.bit_length() - 1
        if (parity >> c) & 1:
            known |= 1 << b
            parity ^= left_masks[b]
        erased ^= 1 << b
        for c2 in g.adj[b]:
            counts[c2] -= 1
            if counts[c2] == 1:
                stack.append(c2)

    path = "peeling"
    if erased:
        path = "peeling+gauss"
        unknowns = mask_to_indices(erased)
        col_of = {b: j for j, b in enumerate(unknowns)}
        rows: list[list[int]] = []  # [row_mask, rhs]
        for c in range(g.m_right):
            rm = right_masks[c] & erased
            rhs = (parity >> c) & 1
            if rm == 0 and rhs == 0:
                continue
            row = 0
            mm = rm
            while mm:
                low = mm & -mm
                row |= 1 << col_of[low.bit_length() - 1]
                mm ^= low
            rows.append([row, rhs])
        pivots: dict[int, tuple[int, int]] = {}
        for row, rhs in rows:
            stored = False
            while row:
                col = (row & -row).bit_length() - 1
                if col in pivots:
                    prow, prhs = pivots[col]
                    row ^= prow
                    rhs ^= prhs
                else:
                    # pivot col is the lowest set bit, so every other column
                    # of a stored row is strictly larger
                    pivots[col] = (row, rhs)
                    stored = True
                    break
            if not stored and rhs == 1:
                return DecodeOutcome(
                    algorithm, "failure", reason="not-a-codeword", path=path
                )
        if len(pivots) < len(unknowns):
            return DecodeOutcome(algorithm, "failure", reason="stalled", path=path)
        # unique solution; solve in descending pivot order
        values = [0] * len(unknowns)
        for col in sorted(pivots, reverse=True):
            row, rhs = pivots[col]
            acc = rhs
            rest = row ^ (1 << col)
            while rest:
                j = (rest & -rest).bit_length() - 1
                acc ^= values[j]
                rest ^= rest & -rest
            values[col] = acc
        for j, b in enumerate(unknowns):
            if values[j]:
                known |= 1 << b
        parity = syndrome_bits(g, known)

    if parity != 0:
        return DecodeOutcome(algorithm, "failure", reason="not-a-codeword", path=path)
    word = Word(g.n_left, known)
    return DecodeOutcome(
        algorithm,
        "success",
        word=word,
        radius=Fraction(cap) if cap is not None else None,
        corrected=n_erased,
        iterations=n_erased,
        path=path,
    )


def _find_and_erase(
    g: BipartiteGraph, bits: int, cfg: FindConfig, capacity: Optional[int]
) -> tuple[Optional[int], str, FindTrace]:
    """Find suspects, erase them, erasure-decode. Returns candidate bits."""
    trace = find_suspects(g, Word(g.n_left, bits), cfg)
    if capacity is not None and trace.size > capacity:
        return None, "list-exceeds-capacity", trace
    sub = decode_erasures(g, Word(g.n_left, bits & ~trace.l_mask, trace.l_mask))
    if not sub.ok:
        return None, sub.reason or "failed", trace
    return sub.word.bits, "ok", trace


def fixed_find_and_decode(
    g: BipartiteGraph,
    y: Word,
    params: ExpanderParams,
    xi=Fraction(1, 100),
) -> DecodeOutcome:
    """Find suspects at delta = eps, erase them, decode from erasures.

    The erasure budget is floor((1-xi)/(2 eps) * alpha * N); a larger suspect
    set fails as no-candidate rather than being truncated. No distance
    validation beyond the candidate being a codeword.
    """
    _check_plain(g, y)
    capacity = ErasureConfig.from_params(params, xi).max_erasures(g.n_left)
    cand, why, trace = _find_and_erase(
        g, y.bits, FindConfig.from_delta(params.eps), capacity
    )
    if cand is None:
        return DecodeOutcome(
            "find-erase", "failure", reason="no-candidate",
            iterations=trace.size, path=why,
        )
    return DecodeOutcome(
        "find-erase",
        "success",
        word=Word(g.n_left, cand),
        corrected=(y.bits ^ cand).bit_count(),
        iterations=trace.size,
        path="find+erase",
    )


# -- flipping ----------------------------------------------------------------


def flip_decode_ss(
    g: BipartiteGraph,
    y: Word,
    threshold_fraction=None,
    max_rounds: int = 100,
    eps=None,
) -> DecodeOutcome:
    """Parallel bit flipping: each round flips every bit whose unsatisfied
    check count is at least threshold_fraction * D (default 1 - 2*eps).

    Stops at a codeword, or as stalled when the number of unsatisfied checks
    fails to strictly decrease (or after max_rounds).
    """
    _check_plain(g, y)
    if threshold_fraction is None:
        if eps is None:
            raise InvalidParameters("need threshold_fraction or eps")
        threshold_fraction = 1 - 2 * as_fraction(eps)
    tf = as_fraction(threshold_fraction)
    if not Fraction(1, 2) < tf <= 1:
        raise InvalidParameters(f"threshold_fraction must be in (1/2, 1], got {tf}")
    n, d = g.n_left, g.d_left
    need = tf * d
    left_masks = g.left_masks
    z = y.bits
    synd = syndrome_bits(g, z)
    unsat = synd.bit_count()
    rounds = 0
    flips = 0
    while True:
        if synd == 0:
            return DecodeOutcome(
                "ss-flip",
                "success",
                word=Word(n, z),
                corrected=(y.bits ^ z).bit_count(),
                iterations=rounds,
                flips=flips,
            )
        if rounds >= max_rounds:
            return DecodeOutcome(
                "ss-flip", "failure", reason="stalled",
                iterations=rounds, flips=flips, path="max-rounds",
            )
        l0 = 0
        for i in range(n):
            if (left_masks[i] & synd).bit_count() >= need:
                l0 |= 1 << i
        if l0 == 0:
            return DecodeOutcome(
                "ss-flip", "failure", reason="stalled",
                iterations=rounds, flips=flips, path="no-flippable-bit",
            )
        z ^= l0
        synd ^= syndrome_bits(g, l0)
        flips += l0.bit_count()
        rounds += 1
        new_unsat = synd.bit_count()
        if synd != 0 and new_unsat >= unsat:
            return DecodeOutcome(
                "ss-flip", "failure", reason="stalled",
                iterations=rounds, flips=flips, path="unsat-not-decreasing",
            )
        unsat = new_unsat


@dataclass(frozen=True)
class FlipRoundReport:
    flipped: tuple[int, ...]
    threshold: Fraction  # (1 - 3*gamma) * D


def flip_round(g: BipartiteGraph, y: Word, gamma) -> tuple[Word, FlipRoundReport]:
    """Flip every bit with at least (1 - 3*gamma)*D unsatisfied checks."""
    _check_plain(g, y)
    gamma = as_fraction(gamma)
    if not 0 <= gamma <= 1:
        raise InvalidParameters(f"gamma must be in [0, 1], got {gamma}")
    d = g.d_left
    need = (1 - 3 * gamma) * d
    synd = syndrome_bits(g, y.bits)
    l0 = 0
    for i in range(g.n_left):
        if (g.left_masks[i] & synd).bit_count() >= need:
            l0 |= 1 << i
    return Word(y.n, y.bits ^ l0), FlipRoundReport(mask_to_indices(l0), need)


# -- Viderman-style find-and-erase decoding ----------------------------------


def viderman_decode(
    g: BipartiteGraph,
    y: Word,
    params: ExpanderParams,
    radius=None,
    xi=Fraction(1, 100),
) -> DecodeOutcome:
    """Find suspects at delta = eps, erase, decode, then validate the result
    against the decoding radius.

    The default radius is the baseline (1-3 eps)/(1-2 eps) * floor(alpha*N),
    which needs eps < 1/3; pass ``radius`` to override.
    """
    _check_plain(g, y)
    eps = params.eps
    if radius is None:
        if eps >= Fraction(1, 3):
            raise InvalidParameters("baseline radius needs eps < 1/3; pass radius=")
        radius = (1 - 3 * eps) / (1 - 2 * eps) * math.floor(params.alpha * g.n_left)
    else:
        radius = as_fraction(radius)
    capacity = ErasureConfig.from_params(params, xi).max_erasures(g.n_left)
    cand, why, trace = _find_and_erase(
        g, y.bits, FindConfig.from_delta(eps), capacity
    )
    if cand is None:
        return DecodeOutcome(
            "viderman", "failure", reason="no-candidate",
            radius=radius, iterations=trace.size, path=why,
        )
    dist = (y.bits ^ cand).bit_count()
    if dist > radius:
        return DecodeOutcome(
            "viderman", "failure", reason="radius-exceeded",
            radius=radius, iterations=trace.size, path="find+erase",
        )
    return DecodeOutcome(
        "viderman",
        "success",
        word=Word(g.n_left, cand),
        radius=radius,
        corrected=dist,
        iterations=trace.size,
        path="find+erase",
    )


# -- guess-and-flip (enumerated collision densities) --------------------------


@dataclass(frozen=True)
class GuessSchedule:
    """Enumerated per-iteration collision-density guesses.

    ``gammas`` is the grid {eta, 2 eta, ..., ceil(1/eta) eta}; a run makes
    ``ell`` guesses, enough rounds for a per-round error reduction of beta
    to shrink any starting error set to a third.
    """

    beta: Fraction
    eta: Fraction
    ell: int
    gammas: tuple[Fraction, ...]

    @classmethod
    def for_beta(cls, beta, eta=None, ell: Optional[int] = None) -> "GuessSchedule":
        beta = as_fraction(beta)
        if not 0 < beta < Fraction(1, 4):
            raise InvalidParameters(f"beta must be in (0, 1/4), got {beta}")
        eta = beta / 100 if eta is None else as_fraction(eta)
        if eta <= 0:
            raise InvalidParameters("eta must be positive")
        min_ell = math.ceil(math.log(1 / 3) / math.log(1 - float(beta)))
        if ell is None:
            ell = min_ell
        elif ell < min_ell:
            raise InvalidParameters(f"ell must be at least {min_ell}")
        gammas = tuple(i * eta for i in range(1, math.ceil(1 / eta) + 1))
        return cls(beta, eta, ell, gammas)


def guess_flip_decode(
    g: BipartiteGraph,
    y: Word,
    params: ExpanderParams,
    beta,
    schedule: Optional[GuessSchedule] = None,
    xi=Fraction(1, 100),
) -> DecodeOutcome:
    """Enumerate guess sequences; per guess either flip the heavy-unsatisfied
    bits (small guess) or find-and-erase (large guess), finishing each
    sequence with the baseline find-and-erase decoder; accept the first
    candidate codeword within (1 - eps) * alpha * N of the input.

    Two guess sequences that induce the same integer flip thresholds and
    branch choices run identically, so the enumeration walks behavior
    classes depth-first (ascending grid order, find branch last) with
    memoization instead of materializing every sequence; the accepted
    candidate is the first in that deterministic order.
    """
    _check_plain(g, y)
    beta = as_fraction(beta)
    eps, alpha = params.eps, params.alpha
    if eps > Fraction(1, 4) - beta:
        raise InvalidParameters(f"need eps <= 1/4 - beta, got eps={eps}, beta={beta}")
    if schedule is None:
        schedule = GuessSchedule.for_beta(beta)
    n, d = g.n_left, g.d_left
    left_masks = g.left_masks
    radius = (1 - eps) * alpha * n
    capacity = ErasureConfig.from_params(params, xi).max_erasures(n)
    vid_radius = (1 - 3 * eps) / (1 - 2 * eps) * math.floor(alpha * n)
    cutoff = Fraction(2, 3) * eps + schedule.eta

    flip_thresholds: list[int] = []
    seen_t: set[int] = set()
    has_find = False
    for gv in schedule.gammas:  # grid is ascending
        if gv < cutoff:
            t = max(0, math.ceil((1 - 3 * gv) * d))
            if t not in seen_t:
                seen_t.add(t)
                flip_thresholds.append(t)
        else:
            has_find = True
            break

    find_cfg = FindConfig.from_delta(eps)
    fixed_cache: dict[int, Optional[int]] = {}

    def fixed(z: int) -> Optional[int]:
        if z not in fixed_cache:
            fixed_cache[z] = _find_and_erase(g, z, find_cfg, capacity)[0]
        return fixed_cache[z]

    y_bits = y.bits
    nodes = 0
    memo_fail: set[tuple[int, int]] = set()
    found: list = []

    def dfs(z: int, depth: int, flips: int, path: tuple) -> bool:
        nonlocal nodes
        if (z, depth) in memo_fail:
            return False
        nodes += 1
        if depth == schedule.ell:
            cand = fixed(z)
            if (
                cand is not None
                and (z ^ cand).bit_count() <= vid_radius
                and (y_bits ^ cand).bit_count() <= radius
            ):
                found.append((cand, path + ("baseline",), flips))
                return True
            memo_fail.add((z, depth))
            return False
        synd = syndrome_bits(g, z)
        counts = [(left_masks[i] & synd).bit_count() for i in range(n)]
        for t in flip_thresholds:
            l0 = 0
            for i in range(n):
                if counts[i] >= t:
                    l0 |= 1 << i
            if dfs(z ^ l0, depth + 1, flips + l0.bit_count(), path + (("flip", t),)):
                return True
        if has_find:
            cand = fixed(z)
            if cand is not None and (y_bits ^ cand).bit_count() <= radius:
                found.append((cand, path + ("find",), flips))
                return True
        memo_fail.add((z, depth))
        return False

    if dfs(y_bits, 0, 0, ()):
        cand, path, flips = found[0]
        return DecodeOutcome(
            "guess-flip",
            "success",
            word=Word(n, cand),
            radius=radius,
            corrected=(y_bits ^ cand).bit_count(),
            iterations=nodes,
            flips=flips,
            enumeration_index=path,
        )
    return DecodeOutcome(
        "guess-flip", "failure", reason="no-candidate",
        radius=radius, iterations=nodes,
    )


def scaled_guess_flip_decode(
    g: BipartiteGraph,
    y: Word,
    params: ExpanderParams,
    eta,
    xi=Fraction(1, 100),
) -> DecodeOutcome:
    """Run the guess-and-flip decoder at the traded-up parameters
    (k*alpha, k*eps) with k = (1/4 - beta)/eps, beta = eta.

    The validated radius becomes (1 - k*eps) * k*alpha * N. k is capped at
    1/alpha so the scaled set-size fraction stays at most 1; k <= 1 falls
    back to the unscaled decoder.
    """
    _check_plain(g, y)
    eta = as_fraction(eta)
    if eta <= 0:
        raise InvalidParameters("eta must be positive")
    eps, alpha = params.eps, params.alpha
    if eps >= Fraction(1, 4):
        raise InvalidParameters(f"need eps < 1/4, got {eps}")
    beta = eta
    k = (Fraction(1, 4) - beta) / eps
    if k > 1 / alpha:
        k = 1 / alpha
    if k <= 1:
        out = guess_flip_decode(g, y, params, beta=Fraction(1, 4) - eps, xi=xi)
        return replace(out, algorithm="guess-flip-scaled", path="unscaled-fallback")
    scaled = ExpanderParams(k * alpha, k * eps)
    beta2 = Fraction(1, 4) - k * eps
    out = guess_flip_decode(g, y, scaled, beta=beta2, xi=xi)
    return replace(out, algorithm="guess-flip-scaled", path=f"k={k}")


# -- guess-expansion decoding (eps <= 1/8) ------------------------------------


def _accept_radius(params: ExpanderParams, n: int) -> Fraction:
    return (1 - 2 * params.eps) / (4 * params.eps) * params.alpha * n


def _run_expansion_branches(
    g: BipartiteGraph,
    y: Word,
    params: ExpanderParams,
    branches,  # iterable of (enum_index, ExpansionGuess, FindConfig)
    algorithm: str,
) -> DecodeOutcome:
    n, d = g.n_left, g.d_left
    accept = _accept_radius(params, n)
    seen: set[int] = set()
    attempts = 0
    for enum_index, guess, cfg in branches:
        heff = cfg.effective_threshold(d)
        if heff in seen:
            continue
        seen.add(heff)
        attempts += 1
        cand, _, _ = _find_and_erase(g, y.bits, cfg, None)
        if cand is not None and (y.bits ^ cand).bit_count() <= accept:
            return DecodeOutcome(
                algorithm,
                "success",
                word=Word(n, cand),
                radius=accept,
                corrected=(y.bits ^ cand).bit_count(),
                iterations=attempts,
                enumeration_index=enum_index,
                guess=guess,
            )
    return DecodeOutcome(
        algorithm, "failure", reason="no-candidate",
        radius=accept, iterations=attempts,
    )


def guess_expansion_decode_poly(
    g: BipartiteGraph, y: Word, params: ExpanderParams, slack=Fraction(0)
) -> DecodeOutcome:
    """Enumerate every consistent guess (|F|, |Gamma(F)|) = (i, j); per guess
    set the find threshold from delta = sqrt(gamma*x*eps) + slack when
    gamma*x >= eps and x >= 1, else delta = eps + slack, then find-and-erase;
    accept a candidate within (1-2 eps)/(4 eps) * alpha * N of the input.

    Guesses are tried with i ascending and j descending, and guesses whose
    thresholds admit the same integer counts are run once.
    """
    _check_plain(g, y)
    eps = params.eps
    if eps > Fraction(1, 8):
        raise InvalidParameters(f"need eps <= 1/8, got {eps}")
    slack = as_fraction(slack)
    if slack < 0:
        raise InvalidParameters("slack must be nonnegative")
    n, m, d = g.n_left, g.m_right, g.d_left
    alpha_n = params.alpha * n

    def branches():
        for i in range(1, n + 1):
            x = i / alpha_n
            for j in range(m, 0, -1):
                if j > d * i:
                    continue
                gamma = 1 - Fraction(j, d * i)
                if gamma * x >= eps and x >= 1:
                    guess = ExpansionGuess(x, gamma, None, "sqrt", gamma * x * eps, slack)
                    cfg = FindConfig(gamma * x * eps, slack)
                else:
                    guess = ExpansionGuess(x, gamma, None, "plain", Fraction(0), eps + slack)
                    cfg = FindConfig(Fraction(0), eps + slack)
                yield (i, j), guess, cfg

    return _run_expansion_branches(g, y, params, branches(), "guess-expansion")


def grid_guess_values(eps, eta_prime) -> tuple[Fraction, ...]:
    """The product-guess grid {0, eta, ..., ceil(1/eta) eta}, eta = eps*eta'."""
    eps = as_fraction(eps)
    eta_prime = as_fraction(eta_prime)
    if eta_prime <= 0:
        raise InvalidParameters("eta_prime must be positive")
    eta = eps * eta_prime
    return tuple(k * eta for k in range(0, math.ceil(1 / eta) + 1))


def guess_expansion_decode_grid(
    g: BipartiteGraph, y: Word, params: ExpanderParams, eta_prime
) -> DecodeOutcome:
    """Grid variant: only the product gamma*x is guessed, from a fixed grid
    with step eta = eps * eta_prime, so the number of branches is independent
    of the graph size. delta = sqrt(value*eps) + eta on the large branch,
    eps + 2*eta on the small branch; acceptance as in the full enumeration.
    """
    _check_plain(g, y)
    eps = params.eps
    if eps > Fraction(1, 8):
        raise InvalidParameters(f"need eps <= 1/8, got {eps}")
    values = grid_guess_values(eps, eta_prime)
    eta = eps * as_fraction(eta_prime)

    def branches():
        for idx, gv in enumerate(values):
            if gv >= eps:
                guess = ExpansionGuess(None, None, gv, "sqrt", gv * eps, eta)
                cfg = FindConfig(gv * eps, eta)
            else:
                guess = ExpansionGuess(None, None, gv, "plain", Fraction(0), eps + 2 * eta)
                cfg = FindConfig(Fraction(0), eps + 2 * eta)
            yield (idx,), guess, cfg

    return _run_expansion_branches(g, y, params, branches(), "guess-expansion-grid")
