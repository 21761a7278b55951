"""Construction and exact counting of the cross-bifix-free sets CBFS(q, n).

CBFS(q, n) is the disjoint union of three families of length-n paths over a
q-letter alphabet (q >= 3, n >= 3), distinguished by their final height:

* family A (ends at height 0): a Motzkin prefix of length i <= n // 2
  followed by an elevated suffix; when n is even, words made of two
  same-length elevated halves are excluded,
* family B (ends at height +1): a rise step, then a Motzkin word of length
  i <= n // 2 - 1, then an elevated suffix,
* family C (ends at height -1): a Motzkin word of length n - 1 with no
  ground-level elevated factor of length >= ceil(n / 2), then a fall step.

Counting never materializes words; construction streams per-i blocks and
merges them into canonical order at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .motzkin import generate_elevated, generate_motzkin, has_ground_elevated_factor, motzkin_count
from .words import FALL, RISE, Word, format_word_lines, is_elevated, parse_word_lines

PROVENANCE_TAGS = ("A", "B", "C", "baseline", "external")


@dataclass(frozen=True)
class CodeSet:
    """A duplicate-free list of equal-length words in strictly increasing
    lexicographic order, with a per-word provenance tag."""

    q: int
    n: int
    words: tuple[Word, ...]
    provenance: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.words) != len(self.provenance):
            raise ValueError("one provenance tag per word required")
        for tag in self.provenance:
            if tag not in PROVENANCE_TAGS:
                raise ValueError(f"unknown provenance tag {tag!r}")
        prev = None
        for w in self.words:
            if w.q != self.q or len(w) != self.n:
                raise ValueError(f"word {w.to_text()!r} does not live in Z_{self.q}^{self.n}")
            if prev is not None and not prev < w:
                raise ValueError("words must be strictly increasing; duplicates are not allowed")
            prev = w

    @classmethod
    def build(cls, q: int, n: int, tagged_words: Iterable[tuple[Word, str]]) -> "CodeSet":
        """Sort into canonical order and drop duplicates (first tag wins)."""
        seen: dict[tuple[int, ...], tuple[Word, str]] = {}
        for word, tag in tagged_words:
            seen.setdefault(word.symbols, (word, tag))
        ordered = sorted(seen.values(), key=lambda item: item[0].symbols)
        words = tuple(item[0] for item in ordered)
        tags = tuple(item[1] for item in ordered)
        return cls(q, n, words, tags)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    @cached_property
    def _keys(self) -> frozenset[tuple[int, ...]]:
        return frozenset(w.symbols for w in self.words)

    def __contains__(self, word: Word) -> bool:
        return word.symbols in self._keys

    def without(self, word: Word) -> "CodeSet":
        """A copy with one member removed (used by mutation checks)."""
        if word not in self:
            raise ValueError(f"{word.to_text()!r} is not a member")
        pairs = [(w, t) for w, t in zip(self.words, self.provenance) if w.symbols != word.symbols]
        return CodeSet.build(self.q, self.n, pairs)

    def to_text(self) -> str:
        return format_word_lines(self.words)

    @classmethod
    def from_text(cls, text: str, q: int, n: int | None = None, tag: str = "external") -> "CodeSet":
        words = parse_word_lines(text, q)
        if n is None:
            if not words:
                raise ValueError("cannot infer word length from an empty list")
            n = len(words[0])
        return cls.build(q, n, [(w, tag) for w in words])

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "provenance": list(self.provenance),
            "words": [w.to_text() for w in self.words],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "CodeSet":
        q, n = data["q"], data["n"]
        pairs = [(Word.from_text(t, q), tag) for t, tag in zip(data["words"], data["provenance"])]
        return cls.build(q, n, pairs)


def _require_domain(q: int, n: int) -> None:
    if q < 3:
        raise ValueError(f"construction needs an alphabet of size q >= 3, got {q}")
    if n < 3:
        raise ValueError(f"construction needs word length n >= 3, got {n}")


def construct_A(q: int, n: int) -> CodeSet:
    """Family A: alpha beta with alpha Motzkin of length i <= n // 2 and
    beta elevated of length n - i, minus the two-elevated-halves words."""
    _require_domain(q, n)
    colors = q - 2
    half = n // 2
    out = []
    for i in range(half + 1):
        assert n - i >= 2
        exclude_elevated_alpha = n % 2 == 0 and i == half
        for alpha in generate_motzkin(colors, i):
            if exclude_elevated_alpha and is_elevated(alpha):
                continue
            for beta in generate_elevated(colors, n - i):
                out.append((alpha + beta, "A"))
    return CodeSet.build(q, n, out)


def count_A(q: int, n: int) -> int:
    """|A(q, n)| = sum_i M(i) M(n-i-2) over 0 <= i <= n // 2, minus
    M(n/2 - 2)^2 when n is even."""
    _require_domain(q, n)
    colors = q - 2
    total = sum(motzkin_count(colors, i) * motzkin_count(colors, n - i - 2) for i in range(n // 2 + 1))
    if n % 2 == 0:
        total -= motzkin_count(colors, n // 2 - 2) ** 2
    return total


def construct_B(q: int, n: int) -> CodeSet:
    """Family B: a rise step, then alpha Motzkin of length i <= n // 2 - 1,
    then beta elevated of length n - i - 1."""
    _require_domain(q, n)
    colors = q - 2
    rise = Word((RISE,), q)
    out = []
    for i in range(n // 2):
        assert n - i - 1 >= 2
        for alpha in generate_motzkin(colors, i):
            for beta in generate_elevated(colors, n - i - 1):
                out.append((rise + alpha + beta, "B"))
    return CodeSet.build(q, n, out)


def count_B(q: int, n: int) -> int:
    """|B(q, n)| = sum_i M(i) M(n-i-3) over 0 <= i <= n // 2 - 1."""
    _require_domain(q, n)
    colors = q - 2
    return sum(motzkin_count(colors, i) * motzkin_count(colors, n - i - 3) for i in range(n // 2))


def construct_C(q: int, n: int) -> CodeSet:
    """Family C: gamma 0 with gamma a Motzkin word of length n - 1 avoiding
    ground-level elevated factors of length >= ceil(n / 2)."""
    _require_domain(q, n)
    colors = q - 2
    threshold = (n + 1) // 2
    out = []
    for gamma in generate_motzkin(colors, n - 1):
        if has_ground_elevated_factor(gamma, threshold):
            continue
        out.append((Word(gamma.symbols + (FALL,), q), "C"))
    return CodeSet.build(q, n, out)


def count_C(q: int, n: int) -> int:
    """|C(q, n)| = M(n-1) minus the words u beta v with beta a ground-level
    elevated factor of length j >= ceil(n / 2).

    Two such factors cannot coexist (their lengths would sum past n - 1),
    so the subtracted double sum counts each excluded word exactly once.
    """
    _require_domain(q, n)
    colors = q - 2
    total = motzkin_count(colors, n - 1)
    for j in range((n + 1) // 2, n):
        for i in range(n - j):
            total -= (
                motzkin_count(colors, i)
                * motzkin_count(colors, j - 2)
                * motzkin_count(colors, n - 1 - i - j)
            )
    return total


def construct_cbfs(q: int, n: int) -> CodeSet:
    """The full set: disjoint union of families A, B and C, canonically
    ordered and provenance-tagged."""
    _require_domain(q, n)
    tagged = []
    for part in (construct_A(q, n), construct_B(q, n), construct_C(q, n)):
        tagged.extend(zip(part.words, part.provenance))
    union = CodeSet.build(q, n, tagged)
    # The three families end at heights 0, +1, -1, so the union is disjoint.
    assert len(union) == len(tagged)
    return union


def count_cbfs(q: int, n: int) -> int:
    return count_A(q, n) + count_B(q, n) + count_C(q, n)
