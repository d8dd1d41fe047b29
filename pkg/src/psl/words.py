"""Free words over a two-letter generating set.

A word is a plain string. Lowercase letters are generators, uppercase letters
their inverses, so "xYx" means x * y^-1 * x. The empty string is the identity.
"""

from __future__ import annotations

Word = str


def invert_word(w: Word) -> Word:
    """Inverse of a word: reverse it and swap the case of every letter."""
    return w[::-1].swapcase()


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[str] = []
    for ch in w:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cyclic_reduce(w: Word) -> Word:
    """Freely reduce, then trim cancelling first/last letters."""
    v = free_reduce(w)
    while len(v) >= 2 and v[0] == v[-1].swapcase():
        v = v[1:-1]
    return v


def word_generators(w: Word) -> tuple[str, ...]:
    """Sorted distinct generator letters occurring in w (case-folded)."""
    return tuple(sorted({ch.lower() for ch in w}))


def letter_count(w: Word, gen: str) -> int:
    """Number of occurrences of gen or its inverse letter in w."""
    return w.count(gen) + w.count(gen.upper())


def proper_power(w: Word) -> tuple[Word, int]:
    """Maximal k >= 1 with w = base^k as a reduced string.

    The input is freely reduced first. For cyclically reduced words string
    periodicity coincides with being a power in the free group.
    """
    v = free_reduce(w)
    n = len(v)
    if n == 0:
        return "", 1
    for p in range(1, n + 1):
        if n % p == 0 and v == v[:p] * (n // p):
            return v[:p], n // p
    raise AssertionError("unreachable: period n always matches")


def rotations(w: Word) -> list[Word]:
    """All cyclic rotations of w, starting with w itself."""
    return [w[i:] + w[:i] for i in range(max(1, len(w)))]


def expanded_alphabet(generators: tuple[str, ...]) -> str:
    """Letter order used everywhere: each generator, then its inverse.

    For generators ("x", "y") this is "xXyY", so x < X < y < Y.
    """
    return "".join(g + g.upper() for g in generators)


def shortlex_key(w: Word, alphabet: str) -> tuple[int, tuple[int, ...]]:
    """Sort key for length-then-lexicographic order over the given alphabet."""
    return len(w), tuple(alphabet.index(ch) for ch in w)


def validate_word(w: Word, generators: tuple[str, ...]) -> Word:
    """Check every letter belongs to the generator alphabet; return w."""
    allowed = set(expanded_alphabet(generators))
    for ch in w:
        if ch not in allowed:
            raise ValueError(f"letter {ch!r} not in alphabet of {generators}")
    return w


def parse_word(text: str, generators: tuple[str, ...] = ("x", "y")) -> Word:
    """Parse an element literal: 'e' or '' is the identity, otherwise letters."""
    s = text.strip().replace(" ", "")
    if s in ("e", "", "1"):
        return ""
    return validate_word(s, generators)


def format_word(w: Word) -> str:
    """Human form of a word; the identity prints as 'e'."""
    return w if w else "e"


def pretty_word(w: Word) -> str:
    """Run-length caret form, e.g. 'XXYY' -> 'x^-2 y^-2'."""
    if not w:
        return "e"
    parts: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = j - i
        gen = w[i].lower()
        exp = -n if w[i].isupper() else n
        parts.append(gen if exp == 1 else f"{gen}^{exp}")
        i = j
    return " ".join(parts)
