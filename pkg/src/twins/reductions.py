"""Encodings of weak-twins and string-twins as coloring twins.

``coloring_from_permutation`` maps ascents to color 1 and descents to
color 2, so the twins of the resulting 2-coloring are exactly the
weak-twins of the permutation. ``coloring_from_string`` colors each
edge {i < j} by the letter at i, so a coloring twin corresponds to a
string-twin after dropping the two chain maxima.
"""

from __future__ import annotations

from .core import EdgeColoring
from .sequences import LetterString, Permutation

ASCENT_COLOR = 1
DESCENT_COLOR = 2


def coloring_from_permutation(pi: Permutation) -> EdgeColoring:
    """2-coloring whose twins are exactly the weak-twins of pi."""
    n = pi.n
    if n < 2:
        raise ValueError("need n >= 2 to have edges")
    vals = pi.values
    colors = []
    for i in range(n):
        vi = vals[i]
        for j in range(i + 1, n):
            colors.append(ASCENT_COLOR if vi < vals[j] else DESCENT_COLOR)
    return EdgeColoring(n, 2, tuple(colors))


def coloring_from_string(x: LetterString) -> EdgeColoring:
    """r-coloring giving each edge the letter of its lower endpoint."""
    n = x.length
    if n < 2:
        raise ValueError("need n >= 2 to have edges")
    letters = x.letters
    colors = []
    for i in range(n):
        li = letters[i]
        colors.extend([li] * (n - 1 - i))
    return EdgeColoring(n, x.r, tuple(colors))
