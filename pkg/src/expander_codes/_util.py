"""Small internal helpers."""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameters


def as_fraction(value) -> Fraction:
    """Coerce to an exact Fraction.

    Accepts Fraction, int, decimal strings ("0.1", "1/5"), and floats.
    Floats go through repr so that e.g. 0.1 means 1/10, not the nearest
    binary double; pass a Fraction or string when exactness matters.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    raise InvalidParameters(f"cannot interpret {value!r} as an exact rational")


def mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def indices_to_mask(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask
