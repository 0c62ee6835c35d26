"""Words over channel alphabets and the ALPV index-sequence correspondence.

LFR words use letters ``1..d``. ALPV index sequences use letters ``0..n_p``
and have length at least 1. For an LFR obtained from an ALPV, channel 1
carries the state and channel ``i + 1`` carries scheduling coordinate ``i``.
"""

from collections.abc import Iterator, Sequence
from itertools import product

from lpvkit_core.errors import StructuralError

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def validate_word(word: Sequence[int], d: int) -> Word:
    """Return word as a tuple, raising StructuralError for letters outside 1..d."""
    w = tuple(int(c) for c in word)
    for c in w:
        if not 1 <= c <= d:
            raise StructuralError(f"letter {c} outside alphabet 1..{d}")
    return w


def words_up_to(d: int, horizon: int, first: int = 1, min_length: int = 0) -> Iterator[Word]:
    """All words over ``first..first+d-1`` with length in ``[min_length, horizon]``, shortlex order."""
    letters = range(first, first + d)
    for k in range(min_length, horizon + 1):
        yield from product(letters, repeat=k)


def count_words(d: int, horizon: int, min_length: int = 0) -> int:
    """Number of words produced by words_up_to."""
    return sum(d**k for k in range(min_length, horizon + 1))


def is_admissible(word: Sequence[int]) -> bool:
    """No two adjacent letters both exceed 1."""
    return not any(a > 1 and b > 1 for a, b in zip(word, word[1:], strict=False))


def admissible_word(sequence: Sequence[int]) -> Word:
    """LFR word whose coefficient equals the Markov parameter of an ALPV index sequence.

    Every index before the last emits ``(j + 1, 1)`` when ``j >= 1`` and ``(1,)``
    when ``j = 0``; the last index emits ``(j + 1,)`` when ``j >= 1`` and nothing
    otherwise.
    """
    if not sequence:
        raise StructuralError("index sequences have length >= 1")
    out: list[int] = []
    for j in sequence[:-1]:
        out.extend((j + 1, 1) if j >= 1 else (1,))
    if sequence[-1] >= 1:
        out.append(sequence[-1] + 1)
    return tuple(out)


def index_sequence(word: Sequence[int]) -> tuple[int, ...]:
    """Inverse of admissible_word.

    Raises:
        StructuralError: If the word has two adjacent letters both above 1.
    """
    seq: list[int] = []
    i, k = 0, len(word)
    while i < k:
        c = word[i]
        if c == 1:
            seq.append(0)
            i += 1
        elif i + 1 == k:
            seq.append(c - 1)
            return tuple(seq)
        elif word[i + 1] == 1:
            seq.append(c - 1)
            i += 2
        else:
            raise StructuralError(f"word {format_word(word)} is not admissible")
    seq.append(0)
    return tuple(seq)


def format_word(word: Sequence[int]) -> str:
    """Human-readable word, ``ε`` for the empty word."""
    if not word:
        return "ε"
    return " ".join(str(c) for c in word)
