"""Alternating sign matrices, corner sums and interlacing families.

Matrices are tuples of tuples, 1-indexed in the interfaces below via explicit
offsets.  Left corner sums accumulate above-and-to-the-left, right corner
sums above-and-to-the-right.
"""

from math import factorial


def validate_asm(m):
    n = len(m)
    assert all(len(r) == n for r in m)
    for r in m:
        assert set(r) <= {-1, 0, 1}
    for line in list(m) + [[m[i][j] for i in range(n)] for j in range(n)]:
        partial = 0
        for v in line:
            partial += v
            assert partial in (0, 1)
        assert partial == 1
    return tuple(tuple(r) for r in m)


def asm_count_formula(n):
    num = den = 1
    for k in range(n):
        num *= factorial(3 * k + 1)
        den *= factorial(n + k)
    assert num % den == 0
    return num // den


def enumerate_asms(n):
    """Build matrices row by row from interlacing one-column-index subsets."""

    def interlace(a, b):
        # a strictly increasing of size k, b of size k+1
        return all(b[i] <= a[i] <= b[i + 1] for i in range(len(a)))

    out = []

    def rec(chain):
        k = len(chain) - 1
        if k == n:
            rows = []
            for i in range(1, n + 1):
                prev, cur = set(chain[i - 1]), set(chain[i])
                rows.append(
                    tuple(
                        (1 if j in cur else 0) - (1 if j in prev else 0)
                        for j in range(1, n + 1)
                    )
                )
            out.append(validate_asm(rows))
            return
        from itertools import combinations

        for nxt in combinations(range(1, n + 1), k + 1):
            if interlace(chain[-1], nxt):
                rec(chain + [nxt])

    rec([()])
    return out


def row_sum_right(m, i, j):
    return sum(m[i - 1][j:])


def row_sum_left(m, i, j):
    return sum(m[i - 1][: j - 1])


def col_sum_below(m, i, j):
    return sum(m[k][j - 1] for k in range(i, len(m)))


def is_inversion(m, i, j):
    return (
        m[i - 1][j - 1] == 0
        and row_sum_right(m, i, j) == 1
        and col_sum_below(m, i, j) == 1
    )


def is_dual_inversion(m, i, j):
    return (
        m[i - 1][j - 1] == 0
        and row_sum_left(m, i, j) == 1
        and col_sum_below(m, i, j) == 1
    )


def inversions(m):
    n = len(m)
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if is_inversion(m, i, j)]


def dual_inversions(m):
    n = len(m)
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if is_dual_inversion(m, i, j)
    ]


def monotone_triangle(m):
    """Rows from size n down to 1; row of size k lists the columns whose
    bottom k entries sum to one."""
    n = len(m)
    rows = []
    for k in range(n, 0, -1):
        cols = [
            j
            for j in range(1, n + 1)
            if sum(m[i][j - 1] for i in range(n - k, n)) == 1
        ]
        rows.append(tuple(cols))
    return tuple(rows)


def left_corner_sums(m):
    n = len(m)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = (
                m[i][j]
                + (out[i - 1][j] if i else 0)
                + (out[i][j - 1] if j else 0)
                - (out[i - 1][j - 1] if i and j else 0)
            )
    return tuple(map(tuple, out))


def right_corner_sums(m):
    n = len(m)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n - 1, -1, -1):
            out[i][j] = (
                m[i][j]
                + (out[i - 1][j] if i else 0)
                + (out[i][j + 1] if j + 1 < n else 0)
                - (out[i - 1][j + 1] if i and j + 1 < n else 0)
            )
    return tuple(map(tuple, out))


def asm_from_left_sums(bar):
    n = len(bar)

    def g(i, j):
        return bar[i - 1][j - 1] if 1 <= i <= n and 1 <= j <= n else 0

    return validate_asm(
        [
            [g(i, j) + g(i - 1, j - 1) - g(i, j - 1) - g(i - 1, j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def asm_from_right_sums(under):
    n = len(under)

    def g(i, j):
        return under[i - 1][j - 1] if 1 <= i <= n and 1 <= j <= n else 0

    return validate_asm(
        [
            [g(i, j) + g(i - 1, j + 1) - g(i, j + 1) - g(i - 1, j) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def f_weight_exponents(m):
    """F(X): min(i, j) minus the left corner sum."""
    n = len(m)
    bar = left_corner_sums(m)
    return tuple(
        tuple(min(i, j) - bar[i - 1][j - 1] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def g_weight_exponents(m):
    """G(X): min(i, n+1-j) minus the right corner sum."""
    n = len(m)
    under = right_corner_sums(m)
    return tuple(
        tuple(min(i, n + 1 - j) - under[i - 1][j - 1] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def reverse_columns(m):
    return tuple(tuple(reversed(r)) for r in m)


# ---------------------------------------------------------------------------
# interlacing families
#
# The sign positions of B are scanned top to bottom, left to right; each sign
# contributes one binary choice, 0 picking the smaller stored corner-sum value.


def _signs(b, sign):
    n = len(b)
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if b[i - 1][j - 1] == sign]


def left_below_family(b, bits):
    """n by n matrices left interlacing below the (n+1) by (n+1) matrix b."""
    n = len(b) - 1
    bar = left_corner_sums(b)

    def g(i, j):
        return bar[i - 1][j - 1]

    choices = {}
    for pos, bit in zip(_signs(b, -1), bits):
        i, j = pos
        choices[(i - 1, j - 1)] = bit
    out = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lo = max(g(i, j), g(i + 1, j + 1) - 1)
            hi = min(g(i, j + 1), g(i + 1, j))
            assert hi - lo in (0, 1), (i, j)
            if hi > lo:
                out[i - 1][j - 1] = hi if choices[(i, j)] else lo
            else:
                out[i - 1][j - 1] = lo
    return asm_from_left_sums(out)


def left_above_family(b, bits):
    """(n+1) by (n+1) matrices left interlacing above the n by n matrix b."""
    n = len(b)
    bar = left_corner_sums(b)

    def g(i, j):
        return bar[i - 1][j - 1] if 1 <= i <= n and 1 <= j <= n else 0

    choices = {}
    for pos, bit in zip(_signs(b, 1), bits):
        choices[pos] = bit
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            if i == n + 1 or j == n + 1:
                out[i - 1][j - 1] = min(i, j)
                continue
            lo = max(g(i - 1, j), g(i, j - 1))
            hi = min(g(i, j), g(i - 1, j - 1) + 1)
            assert hi - lo in (0, 1), (i, j)
            if hi > lo:
                out[i - 1][j - 1] = hi if choices[(i, j)] else lo
            else:
                out[i - 1][j - 1] = lo
    return asm_from_left_sums(out)


def right_below_family(b, bits):
    """n by n matrices right interlacing below the (n+1) by (n+1) matrix b."""
    n = len(b) - 1
    under = right_corner_sums(b)

    def g(i, j):
        return under[i - 1][j - 1]

    choices = {}
    for pos, bit in zip(_signs(b, -1), bits):
        i, j = pos
        choices[(i - 1, j)] = bit
    out = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lo = max(g(i, j + 1), g(i + 1, j) - 1)
            hi = min(g(i, j), g(i + 1, j + 1))
            assert hi - lo in (0, 1), (i, j)
            if hi > lo:
                out[i - 1][j - 1] = hi if choices[(i, j)] else lo
            else:
                out[i - 1][j - 1] = lo
    return asm_from_right_sums(out)


def right_above_family(b, bits):
    """(n+1) by (n+1) matrices right interlacing above the n by n matrix b."""
    n = len(b)
    under = right_corner_sums(b)

    def g(i, j):
        return under[i - 1][j - 1] if 1 <= i <= n and 1 <= j <= n else None

    choices = {}
    for pos, bit in zip(_signs(b, 1), bits):
        i, j = pos
        choices[(i, j + 1)] = bit
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            if j == 1:
                out[i - 1][j - 1] = i
                continue
            if i == n + 1:
                out[i - 1][j - 1] = n + 2 - j
                continue
            lows = [g(i, j), g(i - 1, j - 1)]
            highs = [g(i - 1, j), g(i, j - 1)]
            lo = max(v for v in lows if v is not None) if any(
                v is not None for v in lows
            ) else 0
            his = [v + 1 for v in [highs[0]] if v is not None] + [
                v for v in [highs[1]] if v is not None
            ]
            hi = min(his) if his else lo
            assert hi - lo in (0, 1), (i, j, lo, hi)
            if hi > lo:
                out[i - 1][j - 1] = hi if choices.get((i, j), 0) else lo
            else:
                out[i - 1][j - 1] = lo
    return asm_from_right_sums(out)
