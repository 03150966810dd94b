"""Exact maximum-twin search and exhaustive extremal tables.

Two engines compute the maximum twin size of a coloring. The *plain*
engine is a memoized recursion keyed by (used-index set, last pair) —
simple and exponential, it is the correctness oracle. The *compressed*
engine keys its memo by the two chain ends plus only the used indices
strictly between them: a fresh pick for the trailing chain can only
collide with leading-chain indices inside that window (everything else
used lies at or below the trailing end), so the compressed state is a
complete description of the remaining search. The compressed engine is
validated against the plain one by the test and acceptance suites.

Extremal tables (minimum over all colorings / strings / permutations)
enumerate their spaces in a fixed order under an explicit enumeration
budget; per-instance searches are capped at the running minimum, which
keeps the scans exact while skipping no instance. Enumeration ranges
can be sharded across a process pool.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import EMPTY_TWIN, EdgeColoring, TwinPair
from .sequences import LetterString, Permutation

DEFAULT_MAX_ENUMERATIONS = 1 << 21

StepPredicate = Callable[[int, int, int, int], bool]
StartPredicate = Callable[[int, int], bool]


class BudgetExceededError(RuntimeError):
    """A search or enumeration would exceed its configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what}: needed {needed}, budget {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


def _always(i: int, j: int) -> bool:
    return True


# ---------------------------------------------------------------------------
# Search engines
#
# A twin is grown as a synchronized pair of chains: each step appends one
# fresh index to each chain, both strictly beyond their chain's end, and
# must satisfy a step predicate step(a, p, b, q) relating the old ends
# (a, b) to the new picks (p, q). The predicate is symmetric under
# swapping the chains, so states are canonicalized with the smaller end
# first; starts enumerate i < j.
# ---------------------------------------------------------------------------


def _plain_search(
    n: int, step: StepPredicate, start: StartPredicate = _always
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    if n < 2:
        return 0, ((), ())
    memo: dict = {}

    def rec(mask: int, a: int, b: int) -> int:
        key = (mask, a, b)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = 0
        for p in range(a + 1, n + 1):
            if mask >> p & 1:
                continue
            pbit = 1 << p
            for q in range(b + 1, n + 1):
                if q == p or mask >> q & 1:
                    continue
                if step(a, p, b, q):
                    lo, hi = (p, q) if p < q else (q, p)
                    v = 1 + rec(mask | pbit | (1 << q), lo, hi)
                    if v > best:
                        best = v
        memo[key] = best
        return best

    best_size = 0
    best_start = None
    for i in range(1, n):
        ibit = 1 << i
        for j in range(i + 1, n + 1):
            if start(i, j):
                v = 1 + rec(ibit | (1 << j), i, j)
                if v > best_size:
                    best_size, best_start = v, (i, j)
    if best_start is None:
        return 0, ((), ())

    chain1 = [best_start[0]]
    chain2 = [best_start[1]]
    mask = (1 << chain1[0]) | (1 << chain2[0])
    remaining = best_size - 1
    while remaining > 0:
        a, b = chain1[-1], chain2[-1]
        found = False
        for p in range(a + 1, n + 1):
            if mask >> p & 1:
                continue
            for q in range(b + 1, n + 1):
                if q == p or mask >> q & 1:
                    continue
                if not step(a, p, b, q):
                    continue
                lo, hi = (p, q) if p < q else (q, p)
                if memo.get((mask | (1 << p) | (1 << q), lo, hi)) == remaining - 1:
                    chain1.append(p)
                    chain2.append(q)
                    mask |= (1 << p) | (1 << q)
                    remaining -= 1
                    found = True
                    break
            if found:
                break
        if not found:
            raise RuntimeError("plain-engine witness replay failed")
    return best_size, (tuple(chain1), tuple(chain2))


def _compressed_search(
    n: int,
    step: StepPredicate,
    start: StartPredicate = _always,
    max_states: int | None = None,
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    if n < 2:
        return 0, ((), ())
    memo: dict = {}

    def rec(a: int, b: int, window: tuple[int, ...]) -> int:
        # a < b; window = used indices strictly between a and b (they all
        # belong to the chain ending at b, and are the only indices a
        # fresh pick for the a-chain can still collide with).
        key = (a, b, window)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if max_states is not None and len(memo) >= max_states:
            raise BudgetExceededError("search states", len(memo) + 1, max_states)
        best = 0
        wset = set(window)
        for p in range(a + 1, n + 1):
            if p == b or p in wset:
                continue
            for q in range(b + 1, n + 1):
                if q == p:
                    continue
                if step(a, p, b, q):
                    lo, hi = (p, q) if p < q else (q, p)
                    nw = tuple(w for w in window if w > lo)
                    if lo < b:
                        nw += (b,)
                    v = 1 + rec(lo, hi, nw)
                    if v > best:
                        best = v
        memo[key] = best
        return best

    best_size = 0
    best_start = None
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if start(i, j):
                v = 1 + rec(i, j, ())
                if v > best_size:
                    best_size, best_start = v, (i, j)
    if best_start is None:
        return 0, ((), ())

    chain1 = [best_start[0]]
    chain2 = [best_start[1]]
    used = {chain1[0], chain2[0]}
    remaining = best_size - 1
    while remaining > 0:
        a, b = chain1[-1], chain2[-1]
        found = False
        for p in range(a + 1, n + 1):
            if p in used:
                continue
            for q in range(b + 1, n + 1):
                if q == p or q in used:
                    continue
                if not step(a, p, b, q):
                    continue
                lo, hi = (p, q) if p < q else (q, p)
                nw = tuple(w for w in sorted(used) if w > lo)
                if memo.get((lo, hi, nw)) == remaining - 1:
                    chain1.append(p)
                    chain2.append(q)
                    used.update((p, q))
                    remaining -= 1
                    found = True
                    break
            if found:
                break
        if not found:
            raise RuntimeError("compressed-engine witness replay failed")
    return best_size, (tuple(chain1), tuple(chain2))


def _capped_max(
    n: int, step: StepPredicate, cap: int, start: StartPredicate = _always
) -> int:
    """min(max twin size, cap): depth-first with a max-end bound, no memo.

    Each extension pushes the larger chain end strictly upward, so at most
    n - max_end extensions remain; branches that cannot beat the current
    best are pruned, and the whole search stops once `cap` is reached.
    """
    if n < 2 or cap <= 0:
        return 0
    best = 0

    def dfs(a: int, b: int, mask: int, size: int) -> bool:
        nonlocal best
        if size > best:
            best = size
            if best >= cap:
                return True
        if size + (n - b) <= best:
            return False
        for p in range(a + 1, n + 1):
            if mask >> p & 1:
                continue
            pbit = 1 << p
            for q in range(b + 1, n + 1):
                if q == p or mask >> q & 1:
                    continue
                if step(a, p, b, q):
                    lo, hi = (p, q) if p < q else (q, p)
                    if dfs(lo, hi, mask | pbit | (1 << q), size + 1):
                        return True
        return False

    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if start(i, j) and dfs(i, j, (1 << i) | (1 << j), 1):
                return best
    return best


# ---------------------------------------------------------------------------
# Maximizers
# ---------------------------------------------------------------------------


def _coloring_step(c: EdgeColoring) -> StepPredicate:
    mat = c.matrix()

    def step(a: int, p: int, b: int, q: int) -> bool:
        return mat[a][p] == mat[b][q]

    return step


def max_twin(
    c: EdgeColoring, engine: str = "compressed", max_states: int | None = None
) -> tuple[int, TwinPair]:
    """Exact maximum twin size of c with one witness.

    The plain engine is practical to roughly n <= 16; the compressed
    engine reaches somewhat further. Returns (0, empty twin) for n < 2.
    """
    step = _coloring_step(c)
    if engine == "plain":
        size, (first, second) = _plain_search(c.n, step)
    elif engine == "compressed":
        size, (first, second) = _compressed_search(c.n, step, max_states=max_states)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return size, (TwinPair(first, second) if size else EMPTY_TWIN)


def _weak_step(pi: Permutation) -> StepPredicate:
    vals = (0,) + pi.values

    def step(a: int, p: int, b: int, q: int) -> bool:
        return (vals[a] < vals[p]) == (vals[b] < vals[q])

    return step


def max_weak_twin(
    pi: Permutation, engine: str = "compressed"
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Exact maximum weak-twin size, comparing permutation values directly."""
    step = _weak_step(pi)
    if engine == "plain":
        return _plain_search(pi.n, step)
    if engine == "compressed":
        return _compressed_search(pi.n, step)
    raise ValueError(f"unknown engine {engine!r}")


def max_string_twin(
    x: LetterString,
) -> tuple[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Exact maximum string-twin length with a witness.

    Scans positions once, keeping the queue of letters the leading chain
    has committed to and the trailing chain must still match in order.
    A letter is only enqueued while enough positions remain to match it;
    unmatched pending letters at the end cost nothing (the twin is the
    matched pairs). States are (position, queue), so the table stays
    small for short strings and small alphabets.
    """
    letters = x.letters
    n = len(letters)
    memo: dict = {}

    def rec(pos: int, queue: tuple[int, ...]) -> int:
        if pos == n:
            return 0
        key = (pos, queue)
        cached = memo.get(key)
        if cached is not None:
            return cached
        a = letters[pos]
        best = rec(pos + 1, queue)
        if queue and queue[0] == a:
            v = 1 + rec(pos + 1, queue[1:])
            if v > best:
                best = v
        if len(queue) < n - pos - 1:
            v = rec(pos + 1, queue + (a,))
            if v > best:
                best = v
        memo[key] = best
        return best

    size = rec(0, ())
    if size == 0:
        return 0, ((), ())

    def value(pos: int, queue: tuple[int, ...]) -> int:
        return 0 if pos == n else memo[(pos, queue)]

    # Replay preferring match > push > skip; pushes become the first chain.
    pending: list[int] = []
    matched: list[tuple[int, int]] = []
    queue: tuple[int, ...] = ()
    pos = 0
    while pos < n:
        a = letters[pos]
        target = value(pos, queue)
        if queue and queue[0] == a and 1 + value(pos + 1, queue[1:]) == target:
            matched.append((pending.pop(0), pos))
            queue = queue[1:]
        elif len(queue) < n - pos - 1 and value(pos + 1, queue + (a,)) == target:
            pending.append(pos)
            queue = queue + (a,)
        pos += 1
    matched = matched[:size]
    first = tuple(p + 1 for p, _ in matched)
    second = tuple(q + 1 for _, q in matched)
    return size, (first, second)


def enumerate_twins(
    c: EdgeColoring, max_size: int | None = None
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield every valid twin of size >= 1 exactly once (first start below second)."""
    n = c.n
    if n < 2:
        return
    mat = c.matrix()
    first: list[int] = []
    second: list[int] = []

    def walk(a: int, b: int, mask: int):
        yield tuple(first), tuple(second)
        if max_size is not None and len(first) >= max_size:
            return
        row_a = mat[a]
        row_b = mat[b]
        for p in range(a + 1, n + 1):
            if mask >> p & 1:
                continue
            cap_color = row_a[p]
            pbit = 1 << p
            for q in range(b + 1, n + 1):
                if q == p or mask >> q & 1:
                    continue
                if row_b[q] == cap_color:
                    first.append(p)
                    second.append(q)
                    yield from walk(p, q, mask | pbit | (1 << q))
                    first.pop()
                    second.pop()

    for i in range(1, n):
        for j in range(i + 1, n + 1):
            first.append(i)
            second.append(j)
            yield from walk(i, j, (1 << i) | (1 << j))
            first.pop()
            second.pop()


# ---------------------------------------------------------------------------
# Extremal tables
# ---------------------------------------------------------------------------


@dataclass
class ExtremalResult:
    """Minimum value over the enumerated space, with a first minimizer."""

    value: int
    minimizer: object
    enumerated: int


def _edge_count(n: int) -> int:
    return n * (n - 1) // 2


def _check_budget(what: str, total: int, max_enumerations: int) -> None:
    if total > max_enumerations:
        raise BudgetExceededError(what, total, max_enumerations)


def _iter_base_counter(width: int, radix: int, start: int, stop: int) -> Iterator[list[int]]:
    """Digits (0-based) of base-`radix` counters in [start, stop); the last
    digit is least significant. The same list object is yielded each time."""
    digits = [0] * width
    idx = start
    for slot in range(width - 1, -1, -1):
        idx, rem = divmod(idx, radix)
        digits[slot] = rem
    count = stop - start
    yielded = 0
    while yielded < count:
        yield digits
        yielded += 1
        if yielded == count:
            break
        slot = width - 1
        while True:
            digits[slot] += 1
            if digits[slot] < radix:
                break
            digits[slot] = 0
            slot -= 1


def _matrix_from_digits(n: int, digits: list[int], mat: list[list[int]]) -> None:
    pos = 0
    for i in range(1, n + 1):
        row = mat[i]
        for j in range(i + 1, n + 1):
            col = digits[pos] + 1
            pos += 1
            row[j] = col
            mat[j][i] = col


def _scan_colorings(args) -> tuple[int, int, tuple[int, ...]]:
    n, r, start, stop = args
    mat = [[0] * (n + 1) for _ in range(n + 1)]

    def step(a: int, p: int, b: int, q: int) -> bool:
        return mat[a][p] == mat[b][q]

    best: int | None = None
    best_idx = start
    best_colors: tuple[int, ...] = ()
    for offset, digits in enumerate(_iter_base_counter(_edge_count(n), r, start, stop)):
        _matrix_from_digits(n, digits, mat)
        if best is None:
            value, _ = max_twin(EdgeColoring(n, r, tuple(d + 1 for d in digits)))
        else:
            value = _capped_max(n, step, best)
        if best is None or value < best:
            best = value
            best_idx = start + offset
            best_colors = tuple(d + 1 for d in digits)
    assert best is not None
    return best, best_idx, best_colors


def _scan_permutations(args) -> tuple[int, int, tuple[int, ...]]:
    n, start, stop = args
    best: int | None = None
    best_idx = start
    best_values: tuple[int, ...] = ()
    perms = itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)
    for offset, values in enumerate(perms):
        vals = (0,) + values

        def step(a: int, p: int, b: int, q: int) -> bool:
            return (vals[a] < vals[p]) == (vals[b] < vals[q])

        if best is None:
            value, _ = max_weak_twin(Permutation(values))
        else:
            value = _capped_max(n, step, best)
        if best is None or value < best:
            best = value
            best_idx = start + offset
            best_values = values
    assert best is not None
    return best, best_idx, best_values


def _scan_strings(args) -> tuple[int, int, tuple[int, ...]]:
    n, r, start, stop = args
    best: int | None = None
    best_idx = start
    best_letters: tuple[int, ...] = ()
    for offset, digits in enumerate(_iter_base_counter(n, r, start, stop)):
        letters = tuple(d + 1 for d in digits)
        value, _ = max_string_twin(LetterString(r, letters))
        if best is None or value < best:
            best = value
            best_idx = start + offset
            best_letters = letters
    assert best is not None
    return best, best_idx, best_letters


def _run_shards(worker, arg_sets, jobs: int):
    if jobs <= 1 or len(arg_sets) <= 1:
        return [worker(a) for a in arg_sets]
    import multiprocessing

    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(worker, arg_sets)


def _shard_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    shards = max(1, min(jobs, total))
    span, extra = divmod(total, shards)
    ranges = []
    lo = 0
    for s in range(shards):
        hi = lo + span + (1 if s < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


def exact_F(
    n: int,
    r: int,
    max_enumerations: int = DEFAULT_MAX_ENUMERATIONS,
    jobs: int = 1,
) -> ExtremalResult:
    """Minimum of max_twin over all r-colorings of K_n, with a first minimizer.

    Enumerates colorings as base-r counters over the upper-triangular edge
    list. Per-coloring searches are capped at the running minimum, which
    cannot change the result: a search stopped at the cap only certifies
    the coloring is not a new minimizer. At the default budget, r=2
    reaches n=7 and r=3 reaches n=5 (counted in enumerations).
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    if n < 2:
        return ExtremalResult(0, EdgeColoring(n, r, ()), 1)
    total = r ** _edge_count(n)
    _check_budget("coloring enumeration", total, max_enumerations)
    shards = [(n, r, lo, hi) for lo, hi in _shard_ranges(total, jobs)]
    results = _run_shards(_scan_colorings, shards, jobs)
    value, _, colors = min(results, key=lambda t: (t[0], t[1]))
    return ExtremalResult(value, EdgeColoring(n, r, colors), total)


def exact_F_weak(
    n: int,
    max_enumerations: int = DEFAULT_MAX_ENUMERATIONS,
    jobs: int = 1,
) -> ExtremalResult:
    """Minimum of max_weak_twin over S_n (n <= 9 at the default budget)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 1
    for t in range(2, n + 1):
        total *= t
    _check_budget("permutation enumeration", total, max_enumerations)
    shards = [(n, lo, hi) for lo, hi in _shard_ranges(total, jobs)]
    results = _run_shards(_scan_permutations, shards, jobs)
    value, _, values = min(results, key=lambda t: (t[0], t[1]))
    return ExtremalResult(value, Permutation(values), total)


def exact_F_string(
    n: int,
    r: int,
    max_enumerations: int = DEFAULT_MAX_ENUMERATIONS,
    jobs: int = 1,
) -> ExtremalResult:
    """Minimum of max_string_twin over [r]^n (r=2 reaches n=21 at the default budget)."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    total = r**n
    _check_budget("string enumeration", total, max_enumerations)
    shards = [(n, r, lo, hi) for lo, hi in _shard_ranges(total, jobs)]
    results = _run_shards(_scan_strings, shards, jobs)
    value, _, letters = min(results, key=lambda t: (t[0], t[1]))
    return ExtremalResult(value, LetterString(r, letters), total)
