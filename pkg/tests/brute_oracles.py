"""Independent brute-force oracles used to pin expected test values.

These enumerate index subsets literally via itertools and share no code
with the package's search engines; they are only practical for tiny
instances. A twin's prefix is itself a twin, so each maximizer walks
sizes upward and stops at the first miss.
"""

from itertools import combinations


def _all_disjoint_pairs(n, size):
    universe = range(1, n + 1)
    for first in combinations(universe, size):
        chosen = set(first)
        rest = [v for v in universe if v not in chosen]
        for second in combinations(rest, size):
            yield first, second


def brute_max_twin(c):
    best = 0
    for size in range(1, c.n // 2 + 1):
        hit = False
        for first, second in _all_disjoint_pairs(c.n, size):
            if all(
                c.color(first[t], first[t + 1]) == c.color(second[t], second[t + 1])
                for t in range(size - 1)
            ):
                hit = True
                break
        if not hit:
            break
        best = size
    return best


def brute_max_string_twin(x):
    letters = x.letters
    n = len(letters)
    best = 0
    for size in range(1, n // 2 + 1):
        hit = False
        for first, second in _all_disjoint_pairs(n, size):
            if all(letters[first[t] - 1] == letters[second[t] - 1] for t in range(size)):
                hit = True
                break
        if not hit:
            break
        best = size
    return best


def brute_max_weak_twin(pi):
    vals = pi.values
    n = len(vals)
    best = 0
    for size in range(1, n // 2 + 1):
        hit = False
        for first, second in _all_disjoint_pairs(n, size):
            if all(
                (vals[first[t] - 1] < vals[first[t + 1] - 1])
                == (vals[second[t] - 1] < vals[second[t + 1] - 1])
                for t in range(size - 1)
            ):
                hit = True
                break
        if not hit:
            break
        best = size
    return best


def brute_lcs(a, b):
    """Largest common subsequence by enumerating subsequence pairs."""
    for size in range(min(len(a), len(b)), 0, -1):
        for pos_a in combinations(range(len(a)), size):
            sub_a = [a[p] for p in pos_a]
            for pos_b in combinations(range(len(b)), size):
                if sub_a == [b[p] for p in pos_b]:
                    return size
    return 0


def brute_enumerate_twins(c):
    """Every valid twin of every size, as a set of (first, second) pairs
    with first[0] < second[0]."""
    twins = set()
    for size in range(1, c.n // 2 + 1):
        for first, second in _all_disjoint_pairs(c.n, size):
            if first[0] > second[0]:
                continue
            if all(
                c.color(first[t], first[t + 1]) == c.color(second[t], second[t + 1])
                for t in range(size - 1)
            ):
                twins.add((first, second))
    return twins
