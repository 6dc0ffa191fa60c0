"""Frozen known-good cycles used by the `examples` self-check command.

Each case rebuilds a small cycle from scratch and compares it, term for
term, against a copy kept literal here on purpose: a regression in any
builder shows up as a diff against these lists rather than as a silent
change of output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .constructions import build_nonbinary, build_odd_pair
from .reflected import binary_reflected, gamma_base, p_ary_reflected, rho_base
from .words import GraySequence

__all__ = ["CASES", "GoldenCase"]


@dataclass(frozen=True)
class GoldenCase:
    label: str
    build: Callable[[], GraySequence]
    expected: tuple[str, ...]


CASES: tuple[GoldenCase, ...] = (
    GoldenCase(
        "binary reflected, n=2",
        lambda: binary_reflected(2),
        ("00", "01", "11", "10"),
    ),
    GoldenCase(
        "binary reflected, n=3",
        lambda: binary_reflected(3),
        ("000", "001", "011", "010", "110", "111", "101", "100"),
    ),
    GoldenCase(
        "ternary reflected, n=3",
        lambda: p_ary_reflected(3, 3),
        (
            "000", "001", "002", "012", "010", "011", "021", "022", "020",
            "120", "121", "122", "102", "100", "101", "111", "112", "110",
            "210", "211", "212", "222", "220", "221", "201", "202", "200",
        ),
    ),
    GoldenCase(
        "ternary distance-2, n=3",
        lambda: build_nonbinary(3, 3, 2),
        (
            "000", "101", "202", "012", "110", "211", "021", "122", "220",
            "100", "201", "002", "112", "210", "011", "121", "222", "020",
            "200", "001", "102", "212", "010", "111", "221", "022", "120",
        ),
    ),
    GoldenCase(
        "base pair gamma, n=3",
        lambda: gamma_base(3),
        ("000", "100", "101", "111", "110", "010", "011", "001"),
    ),
    GoldenCase(
        "base pair rho, n=3",
        lambda: rho_base(3),
        ("100", "000", "001", "011", "010", "110", "111", "101"),
    ),
    GoldenCase(
        "binary distance-3 gamma, n=5",
        lambda: build_odd_pair(5, 3).gamma,
        (
            "00000", "11100", "00101", "11111", "00110", "11010", "00011", "11001",
            "01100", "10000", "01001", "10011", "01010", "10110", "01111", "10101",
            "11000", "00100", "11101", "00111", "11110", "00010", "11011", "00001",
            "10100", "01000", "10001", "01011", "10010", "01110", "10111", "01101",
        ),
    ),
)
