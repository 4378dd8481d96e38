"""GF(2) code machinery over a bipartite graph.

A word is a length-N bit vector stored as a Python int (bit i = left vertex
i); parity checks are the right vertices. Codewords are exactly the words
whose syndrome is zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from ._util import indices_to_mask, mask_to_indices
from .errors import BudgetExceeded, InvalidInput, InvalidParameters
from .expansion import tradeoff_bound_first
from .graphs import BipartiteGraph, ExpanderParams

__all__ = [
    "Word",
    "Syndrome",
    "NullspaceBasis",
    "DistanceResult",
    "DistanceBound",
    "syndrome",
    "syndrome_bits",
    "is_codeword",
    "nullspace",
    "min_distance_bruteforce",
    "distance_lower_bound",
    "sample_codeword",
    "plant_errors",
    "parse_word",
    "format_word",
]


@dataclass(frozen=True)
class Word:
    """Length-n bit vector with an optional erasure mask.

    ``bits`` holds the known values; erased positions carry no value and are
    kept zero in ``bits``.
    """

    n: int
    bits: int
    erasures: int = 0

    def __post_init__(self):
        full = (1 << self.n) - 1
        if not 0 <= self.bits <= full:
            raise InvalidInput(f"bits out of range for length {self.n}")
        if not 0 <= self.erasures <= full:
            raise InvalidInput(f"erasure mask out of range for length {self.n}")
        if self.bits & self.erasures:
            raise InvalidInput("erased positions must not carry bit values")

    @classmethod
    def zero(cls, n: int) -> "Word":
        return cls(n, 0)

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Word":
        return cls(n, bits)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Word":
        return cls(n, indices_to_mask(support))

    @classmethod
    def from_string(cls, text: str) -> "Word":
        return parse_word(text)

    @property
    def has_erasures(self) -> bool:
        return self.erasures != 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return mask_to_indices(self.bits)

    def erased_positions(self) -> tuple[int, ...]:
        return mask_to_indices(self.erasures)

    def distance(self, other: "Word") -> int:
        if self.n != other.n:
            raise InvalidInput("words have different lengths")
        if self.has_erasures or other.has_erasures:
            raise InvalidInput("Hamming distance undefined with erasures")
        return (self.bits ^ other.bits).bit_count()

    def to_string(self) -> str:
        return format_word(self)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str) -> Word:
    """Parse one line over {0,1,?}; '?' marks an erasure."""
    line = text.strip()
    bits = 0
    erasures = 0
    for i, ch in enumerate(line):
        if ch == "1":
            bits |= 1 << i
        elif ch == "?":
            erasures |= 1 << i
        elif ch != "0":
            raise InvalidInput(f"position {i}: invalid symbol {ch!r}")
    return Word(len(line), bits, erasures)


def format_word(w: Word) -> str:
    out = []
    for i in range(w.n):
        if (w.erasures >> i) & 1:
            out.append("?")
        else:
            out.append("1" if (w.bits >> i) & 1 else "0")
    return "".join(out)


@dataclass(frozen=True)
class Syndrome:
    """Parity-check evaluations; bit c is set iff check c is unsatisfied."""

    m: int
    bits: int

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def unsatisfied(self) -> tuple[int, ...]:
        return mask_to_indices(self.bits)

    def weight(self) -> int:
        return self.bits.bit_count()


def syndrome_bits(g: BipartiteGraph, bits: int) -> int:
    """Syndrome of a raw bit vector, as a mask over checks."""
    s = 0
    masks = g.left_masks
    rest = bits
    while rest:
        low = rest & -rest
        s ^= masks[low.bit_length() - 1]
        rest ^= low
    return s


def syndrome(g: BipartiteGraph, w: Word) -> Syndrome:
    if w.n != g.n_left:
        raise InvalidInput(f"word length {w.n} != N = {g.n_left}")
    if w.has_erasures:
        raise InvalidInput("syndrome undefined with erasures; use decode_erasures")
    return Syndrome(g.m_right, syndrome_bits(g, w.bits))


def is_codeword(g: BipartiteGraph, w: Word) -> bool:
    return syndrome(g, w).is_zero


@dataclass(frozen=True)
class NullspaceBasis:
    """Basis of the code (nullspace of the check matrix) plus its rank."""

    n: int
    rank: int
    basis: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def rate(self) -> Fraction:
        if self.n == 0:
            raise InvalidParameters("rate undefined for N = 0")
        return Fraction(self.n - self.rank, self.n)

    def codeword_count(self) -> int:
        return 1 << self.dimension

    def iter_codewords(self) -> Iterator[int]:
        """All codewords as raw bit vectors via a Gray-code walk."""
        word = 0
        yield word
        for i in range(1, 1 << self.dimension):
            word ^= self.basis[(i & -i).bit_length() - 1]
            yield word

    def words(self) -> Iterator[Word]:
        for bits in self.iter_codewords():
            yield Word(self.n, bits)

    def to_text(self) -> str:
        """One basis word per line as 0/1 characters."""
        return "".join(format_word(Word(self.n, vec)) + "\n" for vec in self.basis)


def nullspace(g: BipartiteGraph) -> NullspaceBasis:
    """Gaussian elimination over GF(2) on the check matrix."""
    n = g.n_left
    rows = list(g.right_masks)
    pivots: list[int] = []  # pivot column per reduced row
    reduced: list[int] = []
    for col in range(n):
        sel = None
        for idx in range(len(rows)):
            if (rows[idx] >> col) & 1:
                sel = idx
                break
        if sel is None:
            continue
        row = rows.pop(sel)
        for idx in range(len(rows)):
            if (rows[idx] >> col) & 1:
                rows[idx] ^= row
        for idx in range(len(reduced)):
            if (reduced[idx] >> col) & 1:
                reduced[idx] ^= row
        reduced.append(row)
        pivots.append(col)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, pivot_col in zip(reduced, pivots):
            if (row >> free) & 1:
                vec |= 1 << pivot_col
        basis.append(vec)
    return NullspaceBasis(n, len(pivots), tuple(basis))


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    witness: Word


def min_distance_bruteforce(g: BipartiteGraph, budget: int = 24) -> DistanceResult:
    """Minimum weight over all nonzero codewords, by nullspace enumeration.

    Refuses when the code dimension exceeds ``budget``. Ties among witnesses
    break by smallest integer bit-encoding, so the result is deterministic.
    """
    ns = nullspace(g)
    if ns.dimension == 0:
        raise InvalidParameters("code is trivial (only the zero word)")
    if ns.dimension > budget:
        raise BudgetExceeded(
            f"code dimension {ns.dimension} exceeds budget {budget}",
            required=ns.dimension,
        )
    best_w = None
    best_bits = None
    word = 0
    for i in range(1, 1 << ns.dimension):
        word ^= ns.basis[(i & -i).bit_length() - 1]
        w = word.bit_count()
        if best_w is None or w < best_w or (w == best_w and word < best_bits):
            best_w, best_bits = w, word
    return DistanceResult(best_w, Word(g.n_left, best_bits))


@dataclass(frozen=True)
class DistanceBound:
    """Distance lower bound: the closed-form headline and a certified floor.

    ``certified_floor`` is the largest w such that every support of weight
    <= w is forced to have a unique neighbor (hence cannot be a codeword)
    by verified expansion plus the size-expansion tradeoff: the largest
    run of sizes s starting at 1 with bound_edges(s) > D*s/2.
    """

    headline: Fraction
    certified_floor: int


def distance_lower_bound(params: ExpanderParams, d: int, n: int) -> DistanceBound:
    alpha, eps = params.alpha, params.eps
    headline = alpha / (2 * eps) * n
    alpha_n = alpha * n
    floor_w = 0
    for s in range(1, n + 1):
        if s <= alpha_n:
            bound = (1 - eps) * d * s
        else:
            if alpha_n <= 1:
                break
            k = Fraction(s) / alpha_n
            bound = tradeoff_bound_first(params, d, n, k).bound_edges
        if bound > Fraction(d * s, 2):
            floor_w = s
        else:
            break
    return DistanceBound(headline, floor_w)


def sample_codeword(g: BipartiteGraph, seed: int) -> Word:
    """Uniform codeword: random GF(2) combination of a nullspace basis."""
    ns = nullspace(g)
    rng = random.Random(seed)
    coeffs = rng.getrandbits(ns.dimension) if ns.dimension else 0
    word = 0
    for j, vec in enumerate(ns.basis):
        if (coeffs >> j) & 1:
            word ^= vec
    return Word(g.n_left, word)


def plant_errors(c: Word, errors: Iterable[int]) -> Word:
    """Flip exactly the positions in ``errors``; an involution."""
    if c.has_erasures:
        raise InvalidInput("cannot plant errors on an erased word")
    mask = 0
    for i in errors:
        if not 0 <= i < c.n:
            raise InvalidInput(f"error position {i} out of range [0, {c.n})")
        bit = 1 << i
        if mask & bit:
            raise InvalidInput(f"duplicate error position {i}")
        mask |= bit
    return Word(c.n, c.bits ^ mask)
