"""Square-free words over {1,2,3} and the 4-letter word obtained by separators.

Words are plain digit strings ("12312"), which is also how they are printed.
"""
from __future__ import annotations

from typing import Sequence

THUE_IMAGES = {"1": "12312", "2": "131232", "3": "1323132"}


def thue_expand(w: str) -> str:
    """Apply the ternary square-free morphism 1->12312, 2->131232, 3->1323132."""
    try:
        return "".join(THUE_IMAGES[ch] for ch in w)
    except KeyError as exc:
        raise ValueError(f"symbol {exc.args[0]!r} not in alphabet {{1,2,3}}") from None


def thue_word(length: int) -> str:
    """Prefix of the morphism's fixed point starting from "1"."""
    if length < 0:
        raise ValueError("length must be non-negative")
    w = "1"
    while len(w) < length:
        w = thue_expand(w)
    return w[:length]


def kp_insert(w: str) -> str:
    """Cut ``w`` into blocks of two (the last may be shorter) and join them with 4."""
    return "4".join(w[i:i + 2] for i in range(0, len(w), 2))


def kp_word(length: int, source: str | None = None) -> str:
    """Prefix of length ``length`` of ``kp_insert(source)``.

    ``source`` defaults to a long enough prefix of :func:`thue_word`; an
    explicit source must be a square-free word over {1,2,3}.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if source is None:
        # every 3 output symbols consume 2 source symbols
        source = thue_word((2 * length) // 3 + 2)
    elif set(source) - set("123") or find_square(source) is not None:
        raise ValueError("source must be a square-free word over {1,2,3}")
    word = kp_insert(source)
    if len(word) < length:
        raise ValueError(f"source too short for length {length}")
    return word[:length]


def find_square(w: Sequence) -> tuple[int, int] | None:
    """Locate a factor ``xx`` with ``x`` non-empty.

    Returns ``(start, half_length)`` minimising the start, then the half
    length, or ``None`` for a square-free word. For each half length ``h``
    one left-to-right scan counts runs of positions with ``w[i] == w[i+h]``;
    a run of ``h`` such positions is a square.
    """
    n = len(w)
    best = None
    for h in range(1, n // 2 + 1):
        run = 0
        limit = n - h if best is None else min(n - h, best[0] + h)
        for i in range(limit):
            if w[i] == w[i + h]:
                run += 1
                if run == h:
                    start = i - h + 1
                    if best is None or start < best[0]:
                        best = (start, h)
                    break
            else:
                run = 0
    return best
