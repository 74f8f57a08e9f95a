"""Integer partitions and their boundary profiles.

Partitions are tuples of weakly decreasing positive integers; the empty
partition is ().  Profiles are 1-indexed strings of '0'/'1' characters read
along the boundary of the diagram, '1' for a horizontal step and '0' for a
vertical one.
"""

def check_partition(la):
    la = tuple(la)
    assert all(a >= b for a, b in zip(la, la[1:])), la
    assert all(a > 0 for a in la), la
    return la


def weight(la):
    return sum(la)


def conjugate(la):
    """Transpose the diagram."""
    if not la:
        return ()
    return tuple(sum(1 for a in la if a >= j) for j in range(1, la[0] + 1))


def contains(la, mu):
    """Whether the diagram of la contains the diagram of mu."""
    if len(mu) > len(la):
        return False
    return all(a >= b for a, b in zip(la, mu))


def order_compare(la, mu):
    """Compare in the containment order: 'less', 'equal', 'greater' or 'incomparable'."""
    if la == mu:
        return "equal"
    down = contains(mu, la)
    up = contains(la, mu)
    if down:
        return "less"
    if up:
        return "greater"
    return "incomparable"


def union(la, mu):
    """Partwise maximum (join in the containment lattice)."""
    if len(mu) > len(la):
        la, mu = mu, la
    return tuple(max(a, b) for a, b in zip(la, mu + (0,) * (len(la) - len(mu))))


def intersect(la, mu):
    """Partwise minimum (meet in the containment lattice)."""
    return tuple(min(a, b) for a, b in zip(la, mu))


def cells(la):
    """Yield the boxes (row, col), 1-indexed."""
    for i, part in enumerate(la, 1):
        for j in range(1, part + 1):
            yield (i, j)


def arm(la, s):
    i, j = s
    return la[i - 1] - j


def leg(la, s):
    i, j = s
    return sum(1 for a in la if a >= j) - i


def hook(la, s):
    return arm(la, s) + leg(la, s) + 1


def profile(la, zeros, ones):
    """Profile of la inside a zeros x ones frame (zeros rows, ones columns).

    The k-th '0' from the left sits at position la[zeros+1-k] + k, reading la
    padded with zero parts.
    """
    la = tuple(la)
    assert len(la) <= zeros and (not la or la[0] <= ones)
    padded = la + (0,) * (zeros - len(la))
    zpos = {padded[zeros - k] + k for k in range(1, zeros + 1)}
    return "".join("0" if p in zpos else "1" for p in range(1, zeros + ones + 1))


def minimal_profile(la):
    """Profile with no leading zeros or trailing ones; '' for the empty partition."""
    if not la:
        return ""
    return profile(la, len(la), la[0])


def partition_of_profile(p):
    """Partition cut out by a profile string; inverse of profile()."""
    zpos = [i for i, b in enumerate(p, 1) if b == "0"]
    n = len(zpos)
    la = tuple(zpos[n - k] - (n - k + 1) for k in range(1, n + 1))
    return tuple(a for a in la if a > 0)


def conjugate_profile(p):
    """Reverse the string and swap 0 <-> 1."""
    return "".join("1" if b == "0" else "0" for b in reversed(p))


def inversions(p):
    """Pairs (i, j), i < j, with p[i] = '1' and p[j] = '0'; one per box."""
    out = []
    zs = [j for j, b in enumerate(p, 1) if b == "0"]
    for i, b in enumerate(p, 1):
        if b == "1":
            out.extend((i, j) for j in zs if j > i)
    return out


def profile_arm(p, i, j):
    """Number of '1's strictly between positions i and j."""
    return p[i : j - 1].count("1")


def profile_leg(p, i, j):
    """Number of '0's strictly between positions i and j."""
    return p[i : j - 1].count("0")


def outside_corners(p):
    """Positions i where p has '1' at i and '0' at i+1 (a '10' subword)."""
    return [i for i in range(1, len(p)) if p[i - 1] == "1" and p[i] == "0"]


def inside_corners(p):
    """Positions i where p has '0' at i and '1' at i+1 (a '01' subword)."""
    return [i for i in range(1, len(p)) if p[i - 1] == "0" and p[i] == "1"]


def is_horizontal_strip(la, mu):
    """Whether la/mu is a horizontal strip (at most one box per column)."""
    if not contains(la, mu):
        return False
    mu = tuple(mu) + (0,) * (len(la) - len(mu))
    return all(la[i + 1] <= mu[i] for i in range(len(la) - 1))


def is_vertical_strip(la, mu):
    return is_horizontal_strip(conjugate(la), conjugate(mu))


def hstrips_down(la):
    """All mu with la/mu a horizontal strip."""
    la = tuple(la)
    out = []

    def rec(i, acc):
        if i == len(la):
            out.append(tuple(a for a in acc if a > 0))
            return
        lo = la[i + 1] if i + 1 < len(la) else 0
        hi = min(la[i], acc[-1]) if acc else la[i]
        for v in range(lo, hi + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return out


def hstrips_up(mu, max_size):
    """All la with la/mu a horizontal strip and |la| <= max_size.

    The cap is required: without it the set is infinite.
    """
    mu = tuple(mu)
    budget = max_size - sum(mu)
    assert budget >= 0
    out = []
    rows = len(mu) + 1

    def rec(i, acc, used):
        if i == rows:
            out.append(tuple(a for a in acc if a > 0))
            return
        cur = mu[i] if i < len(mu) else 0
        above = mu[i - 1] if i >= 1 else None
        hi = cur + (budget - used)
        if above is not None:
            hi = min(hi, above)
        if i >= 1 and acc[i - 1] < cur:
            return
        for v in range(cur, hi + 1):
            rec(i + 1, acc + [v], used + v - cur)

    rec(0, [], 0)
    return out


def partitions_of(n, max_part=None):
    """All partitions of n, largest part at most max_part."""
    if n == 0:
        return [()]
    if max_part is None:
        max_part = n
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def partitions_upto(n):
    """All partitions of weight at most n."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def add_box(la, row):
    """Add one box in the given 1-indexed row."""
    assert 1 <= row <= len(la) + 1
    la = list(la) + [0] * max(0, row - len(la))
    la[row - 1] += 1
    assert row == 1 or la[row - 2] >= la[row - 1]
    return tuple(a for a in la if a > 0)


def remove_box(la, row):
    """Remove one box from the given 1-indexed row."""
    assert 1 <= row <= len(la)
    la = list(la)
    la[row - 1] -= 1
    assert row == len(la) or la[row - 1] >= la[row]
    return check_partition(tuple(a for a in la if a > 0))
