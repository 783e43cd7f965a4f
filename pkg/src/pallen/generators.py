"""Deterministic corpus generators for aperiodic and periodic test words.

All families are prefix-stable: the length-n output is a prefix of the
length-m output for n <= m and identical parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Word

FAMILIES = ("thue_morse", "fibonacci", "period_doubling", "periodic", "random")

_MASK64 = (1 << 64) - 1
_XORSHIFT_SEED0 = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class GeneratorSpec:
    """Family plus family-specific parameters.

    periodic: params["preperiod"] (may be empty) and params["period"] (nonempty).
    random:   params["alphabet_size"] (default 2) and params["seed"] (default 0).
    The substitution families take an optional params["letters"] (default "ab").
    """

    family: str
    length: int
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.length < 1:
            raise ValueError("length must be >= 1")
        if self.family == "periodic" and not self.params.get("period"):
            raise ValueError("periodic family requires a nonempty period word")


def _xorshift64star(state: int) -> tuple[int, int]:
    """One step of xorshift64*: x ^= x>>12; x ^= x<<25; x ^= x>>27; out = x * 2685821657736338717.

    The recurrence is fixed so corpora reproduce bit-for-bit across
    implementations; a zero seed is remapped to a fixed nonzero constant.
    """
    x = state & _MASK64
    x ^= x >> 12
    x = (x ^ (x << 25)) & _MASK64
    x ^= x >> 27
    return x, (x * 2685821657736338717) & _MASK64


def random_letters(n: int, alphabet_size: int = 2, seed: int = 0) -> str:
    """n letters drawn from 'a', 'b', ... via the documented xorshift64* stream."""
    if not 2 <= alphabet_size <= 26:
        raise ValueError("alphabet_size must be in 2..26")
    state = seed & _MASK64 or _XORSHIFT_SEED0
    out = []
    for _ in range(n):
        state, value = _xorshift64star(state)
        out.append(chr(ord("a") + (value >> 32) % alphabet_size))
    return "".join(out)


def thue_morse(n: int, letters: str = "ab") -> str:
    return "".join(letters[bin(i).count("1") % 2] for i in range(n))


def _substitution_prefix(n: int, rules: dict[str, str], start: str) -> str:
    word = start
    while len(word) < n:
        word = "".join(rules[c] for c in word)
    return word[:n]


def fibonacci(n: int, letters: str = "ab") -> str:
    a, b = letters[0], letters[1]
    return _substitution_prefix(n, {a: a + b, b: a}, a)


def period_doubling(n: int, letters: str = "ab") -> str:
    a, b = letters[0], letters[1]
    return _substitution_prefix(n, {a: a + b, b: a + a}, a)


def periodic(n: int, preperiod: str, period: str) -> str:
    if not period:
        raise ValueError("period word must be nonempty")
    reps = preperiod + period * (1 + (n - len(preperiod)) // len(period) + 1)
    return reps[:n]


def generate(spec: GeneratorSpec) -> Word:
    """Materialise the word a spec describes; identical specs give identical words."""
    p = spec.params
    n = spec.length
    if spec.family == "thue_morse":
        return Word(thue_morse(n, p.get("letters", "ab")))
    if spec.family == "fibonacci":
        return Word(fibonacci(n, p.get("letters", "ab")))
    if spec.family == "period_doubling":
        return Word(period_doubling(n, p.get("letters", "ab")))
    if spec.family == "periodic":
        return Word(periodic(n, p.get("preperiod", ""), p["period"]))
    if spec.family == "random":
        return Word(random_letters(n, p.get("alphabet_size", 2), p.get("seed", 0)))
    raise ValueError(f"unknown family {spec.family!r}")
