"""Cylindric plane partitions over a cyclic binary profile.

A cylindric plane partition over the profile pi (a string of '0'/'1' of
length T) is a sequence seq = (mu^0, ..., mu^T) of partitions with
mu^0 == mu^T where mu^k/mu^(k-1) is a horizontal strip when pi[k] == '1' and
mu^(k-1)/mu^k is one when pi[k] == '0'.

The companion objects are labelled cylindric diagrams: finite sets of boxes
(i, j, w) of the cylindric diagram of pi carrying positive integer labels,
where i indexes a '1' of pi, j a '0', w is the winding number and the hook of
the box is j - i + w*T.
"""

from .partitions import (
    hstrips_down,
    hstrips_up,
    is_horizontal_strip,
    partitions_upto,
)
from .correspondences import burge_down, burge_up


def check_profile(pi):
    assert pi and set(pi) <= {"0", "1"}
    return pi


def is_mixed(pi):
    return "0" in pi and "1" in pi


def rotate_profile(pi):
    """sigma(pi)[i] = pi[i+1], cyclically."""
    return pi[1:] + pi[0]


def validate_cpp(pi, seq):
    T = len(pi)
    assert len(seq) == T + 1 and seq[0] == seq[T]
    for k in range(1, T + 1):
        if pi[k - 1] == "1":
            assert is_horizontal_strip(seq[k], seq[k - 1]), (pi, seq, k)
        else:
            assert is_horizontal_strip(seq[k - 1], seq[k]), (pi, seq, k)
    return tuple(map(tuple, seq))


def cpp_weight(seq):
    """Total number of boxes: |mu^1| + ... + |mu^T|."""
    return sum(sum(mu) for mu in seq[1:])


def cpp_refined_weight(seq):
    return tuple(sum(mu) for mu in seq[1:])


def rotate_cpp(pi, seq):
    """Shift the sequence one step along the cylinder."""
    new = tuple(seq[1:]) + (seq[1],)
    return rotate_profile(pi), new


def unrotate_cpp(pi, seq):
    new = (seq[-2],) + tuple(seq[:-1])
    return pi[-1] + pi[:-1], new


def enumerate_cpps(pi, max_weight):
    """All cylindric plane partitions over pi of weight at most max_weight."""
    check_profile(pi)
    T = len(pi)
    out = []

    def rec(k, seq, used):
        mu0 = seq[0]
        if k == T:
            # last step must land exactly on mu^0
            if pi[T - 1] == "1":
                ok = is_horizontal_strip(mu0, seq[-1])
            else:
                ok = is_horizontal_strip(seq[-1], mu0)
            if ok and used + sum(mu0) <= max_weight:
                out.append(tuple(seq) + (mu0,))
            return
        budget = max_weight - used - sum(mu0)  # mu^T still to pay for
        if pi[k - 1] == "1":
            if budget < sum(seq[-1]):
                return
            cand = hstrips_up(seq[-1], budget)
        else:
            cand = [mu for mu in hstrips_down(seq[-1]) if sum(mu) <= budget]
        for mu in cand:
            rec(k + 1, seq + [mu], used + sum(mu))

    for mu0 in partitions_upto(max_weight):
        rec(1, [mu0], 0)
    return out


# ---------------------------------------------------------------------------
# labelled cylindric diagrams


def box_hook(pi, box):
    i, j, w = box
    return j - i + w * len(pi)


def is_valid_box(pi, box):
    T = len(pi)
    i, j, w = box
    if not (1 <= i <= T and 1 <= j <= T):
        return False
    if pi[i - 1] != "1" or pi[j - 1] != "0":
        return False
    return w >= (1 if j < i else 0)


def validate_alcd(pi, labels):
    check_profile(pi)
    for box, m in labels.items():
        assert is_valid_box(pi, box), (pi, box)
        assert m > 0
    return dict(labels)


def alcd_weight(pi, labels):
    return sum(m * box_hook(pi, box) for box, m in labels.items())


def alcd_depth(labels):
    """Smallest d with no labelled box of winding >= d."""
    return max((w + 1 for (_, _, w) in labels), default=0)


def normalize_box(a, b, T):
    """Cover coordinates (a, b) -> canonical (i, j, w) with 1 <= i <= T."""
    r = (a - 1) // T
    a -= r * T
    b -= r * T
    w, j = divmod(b - 1, T)
    return (a, j + 1, w)


def rotate_alcd(pi, labels):
    out = {}
    T = len(pi)
    for (i, j, w), m in labels.items():
        out[normalize_box(i - 1, j + w * T - 1, T)] = m
    return rotate_profile(pi), out


def unrotate_alcd(pi, labels):
    out = {}
    T = len(pi)
    for (i, j, w), m in labels.items():
        out[normalize_box(i + 1, j + w * T + 1, T)] = m
    return pi[-1] + pi[:-1], out


def add_corner(pi, labels, i, m):
    """Fill the valley at linear position i (pi[i] = '0', pi[i+1] = '1').

    Existing boxes keep their cover classes; the new outside-corner box gets
    the label m.
    """
    T = len(pi)
    assert 1 <= i < T and pi[i - 1] == "0" and pi[i] == "1"
    new_pi = pi[: i - 1] + "10" + pi[i + 1 :]
    out = {}
    for (bi, bj, w), lab in labels.items():
        a, b = bi, bj + w * T
        if a % T == (i + 1) % T:
            a -= 1
        if b % T == i % T:
            b += 1
        out[normalize_box(a, b, T)] = lab
    if m:
        out[(i, i + 1, 0)] = m
    return new_pi, out


def remove_corner(pi, labels, i):
    """Inverse of add_corner: strip the peak at linear position i."""
    T = len(pi)
    assert 1 <= i < T and pi[i - 1] == "1" and pi[i] == "0"
    new_pi = pi[: i - 1] + "01" + pi[i + 1 :]
    m = labels.get((i, i + 1, 0), 0)
    out = {}
    for (bi, bj, w), lab in labels.items():
        if (bi, bj, w) == (i, i + 1, 0):
            continue
        a, b = bi, bj + w * T
        if a % T == i % T:
            a += 1
        if b % T == (i + 1) % T:
            b -= 1
        out[normalize_box(a, b, T)] = lab
    return new_pi, out, m


def enumerate_alcds(pi, max_weight):
    """All label assignments of total weight at most max_weight."""
    check_profile(pi)
    T = len(pi)
    boxes = []
    # hooks are j - i + w*T with j - i >= 1 - T, so windings can reach one
    # past max_weight // T before the hook exceeds the budget
    for w in range(max_weight // T + 2):
        for i in range(1, T + 1):
            for j in range(1, T + 1):
                box = (i, j, w)
                if is_valid_box(pi, box) and box_hook(pi, box) <= max_weight:
                    boxes.append(box)
    out = []

    def rec(idx, acc, used):
        if idx == len(boxes):
            out.append(dict(acc))
            return
        box = boxes[idx]
        h = box_hook(pi, box)
        rec(idx + 1, acc, used)
        for m in range(1, (max_weight - used) // h + 1):
            rec(idx + 1, acc + [(box, m)], used + m * h)

    rec(0, [], 0)
    return out


# ---------------------------------------------------------------------------
# the weight-preserving bijection


def down_step(pi, seq, i):
    """Apply the column-deletion rule at the peak i; returns (label, new seq)."""
    T = len(pi)
    assert pi[i - 1] == "1" and pi[i % T] == "0"
    seq = list(seq)
    m, nu = burge_down(seq[i - 1], seq[(i + 1) if i < T else 1], seq[i])
    seq[i] = nu
    if i == T:
        seq[0] = nu
    new_pi = (
        pi[: i - 1] + "01" + pi[i + 1 :] if i < T else "1" + pi[1:-1] + "0"
    )
    return m, new_pi, tuple(seq)


def up_step(pi, seq, i, m):
    """Apply the column-insertion rule at the valley i."""
    T = len(pi)
    assert pi[i - 1] == "0" and pi[i % T] == "1"
    seq = list(seq)
    la = burge_up(seq[i - 1], seq[(i + 1) if i < T else 1], m, seq[i])
    seq[i] = la
    if i == T:
        seq[0] = la
    new_pi = (
        pi[: i - 1] + "10" + pi[i + 1 :] if i < T else "0" + pi[1:-1] + "1"
    )
    return new_pi, tuple(seq)


def first_descent(pi):
    """Leftmost linear peak, or None."""
    for i in range(1, len(pi)):
        if pi[i - 1] == "1" and pi[i] == "0":
            return i
    return None


def phi(pi, seq):
    """Cylindric plane partition -> (base partition, labelled diagram)."""
    seq = validate_cpp(pi, seq)
    T = len(pi)
    limit = (cpp_weight(seq) + T + 2) * (2 * T + 2) + 10
    ops = []
    cur_pi, cur = pi, seq
    rotations = 0
    while any(mu != cur[0] for mu in cur):
        i = first_descent(cur_pi)
        if i is not None:
            m, cur_pi, cur = down_step(cur_pi, cur, i)
            ops.append((i, m))
        else:
            cur_pi, cur = rotate_cpp(cur_pi, cur)
            ops.append(None)
            rotations += 1
        assert len(ops) <= limit
    gamma = cur[0]
    d_pi, labels = cur_pi, {}
    for op in reversed(ops):
        if op is None:
            d_pi, labels = unrotate_alcd(d_pi, labels)
        else:
            i, m = op
            d_pi, labels = add_corner(d_pi, labels, i, m)
    assert d_pi == pi
    return gamma, labels, rotations


def psi(pi, gamma, labels):
    """(base partition, labelled diagram) -> cylindric plane partition."""
    labels = validate_alcd(pi, labels)
    T = len(pi)
    limit = (alcd_weight(pi, labels) + T + 2) * (2 * T + 2) + 10
    ops = []
    cur_pi, cur_labels = pi, labels
    while cur_labels:
        i = first_descent(cur_pi)
        if i is not None:
            cur_pi, cur_labels, m = remove_corner(cur_pi, cur_labels, i)
            ops.append((i, m))
        else:
            cur_pi, cur_labels = rotate_alcd(cur_pi, cur_labels)
            ops.append(None)
        assert len(ops) <= limit
    seq = (gamma,) * (T + 1)
    for op in reversed(ops):
        if op is None:
            cur_pi, seq = unrotate_cpp(cur_pi, seq)
        else:
            i, m = op
            cur_pi, seq = up_step(cur_pi, seq, i, m)
    assert cur_pi == pi
    return validate_cpp(pi, seq)


def local_commutation_check(pi, seq, i, j, mi, mj):
    """Insertions at two disjoint valleys commute."""
    p1, s1 = up_step(pi, seq, i, mi)
    p1, s1 = up_step(p1, s1, j, mj)
    p2, s2 = up_step(pi, seq, j, mj)
    p2, s2 = up_step(p2, s2, i, mi)
    assert (p1, s1) == (p2, s2)
    return s1


# ---------------------------------------------------------------------------
# diagonal weights


def profile_path(pi):
    """Vertices of the boundary path in the plane: '1' ascends, '0' steps left."""
    pts = [(0, 0)]
    for b in pi:
        x, y = pts[-1]
        pts.append((x, y + 1) if b == "1" else (x - 1, y))
    return pts


def diag_weight(pi, labels, k):
    """Number of boxes the diagram contributes to the k-th diagonal."""
    if not labels:
        return 0
    assert is_mixed(pi)
    T = len(pi)
    n = pi.count("0")
    m = pi.count("1")
    pts = profile_path(pi)

    def pt(q):
        r, s = divmod(q, T)
        x, y = pts[s]
        return (x - r * n, y + r * m)

    px, py = pts[k]
    total = 0
    for (i, j, w), lab in labels.items():
        a, b = i, j + w * T
        tx, ty = pt(b - 1)[0], pt(a)[1]
        rmin = -((px - tx) // n)  # ceil((tx - px) / n)
        rmax = (py - ty) // m
        if rmax >= rmin:
            total += lab * (rmax - rmin + 1)
    return total


# ---------------------------------------------------------------------------
# the unrefined product identity


def cylindric_hooks(pi, max_hook):
    """Hooks of all boxes, with multiplicity, up to max_hook."""
    T = len(pi)
    out = []
    inv = [
        (i, j)
        for i in range(1, T + 1)
        for j in range(1, T + 1)
        if pi[i - 1] == "1" and pi[j - 1] == "0"
    ]
    for i, j in inv:
        w = 1 if j < i else 0
        while j - i + w * T <= max_hook:
            out.append(j - i + w * T)
            w += 1
    return sorted(out)


def borodin_lhs(pi, max_weight):
    """Coefficient list: number of cylindric plane partitions by weight."""
    counts = [0] * (max_weight + 1)
    for seq in enumerate_cpps(pi, max_weight):
        counts[cpp_weight(seq)] += 1
    return counts


def borodin_rhs(pi, max_weight):
    """Expand the hook-product side of the identity up to z^max_weight."""
    from . import series

    T = len(pi)
    keep = series.degree_cap(max_weight)
    factors = []
    for n in range(max_weight // T + 1):
        factors.append(series.binomial_factor(((n + 1) * T,), -1, keep))
    for h in cylindric_hooks(pi, max_weight):
        factors.append(series.binomial_factor((h,), -1, keep))
    total = series.product(factors, 1, keep)
    return [int(series.coefficient(total, (d,))) for d in range(max_weight + 1)]


def hook_exponent_vector(pi, i, j, winding):
    """Refined exponents of the hook factor for box (i, j, winding).

    The vector lists the exponents of z_1, ..., z_T where z_k tracks |mu^k|;
    the hook z^(j-i+wT) refines to base copies of z_1...z_T with one extra
    along the cyclic arc of variables z_(i+1), ..., z_j.
    """
    T = len(pi)
    hook = j - i + winding * T
    span = (j - i) % T
    base = (hook - span) // T
    exps = [base] * T
    p = (i - 1) % T  # list index of variable z_i, tracking |mu^i|
    for _ in range(span):
        exps[p] += 1
        p = (p + 1) % T
    return tuple(exps)


def borodin_refined_lhs(pi, max_weight):
    """dict: refined weight vector -> count."""
    out = {}
    for seq in enumerate_cpps(pi, max_weight):
        key = cpp_refined_weight(seq)
        out[key] = out.get(key, 0) + 1
    return out


def borodin_refined_rhs(pi, max_weight):
    from . import series

    T = len(pi)
    keepv = series.degree_cap(max_weight)
    factors = []
    for n in range(max_weight // T + 1):
        e = ((n + 1),) * T
        if keepv(e):
            factors.append(series.binomial_factor(e, -1, keepv))
    inv = [
        (i, j)
        for i in range(1, T + 1)
        for j in range(1, T + 1)
        if pi[i - 1] == "1" and pi[j - 1] == "0"
    ]
    for i, j in inv:
        w = 1 if j < i else 0
        while True:
            e = hook_exponent_vector(pi, i, j, w)
            if not keepv(e):
                break
            factors.append(series.binomial_factor(e, -1, keepv))
            w += 1
    total = series.product(factors, T, keepv)
    return {e: int(c) for e, c in total.items()}
