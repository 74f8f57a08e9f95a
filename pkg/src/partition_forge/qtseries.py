"""Macdonald weights for cylindric plane partitions and the (q, t) identity.

Finite products of factors (1 - q^a t^b)^e are kept in canonical form as
dicts mapping (a, b) to a nonzero integer exponent; (0, 0) never occurs.
Alphabets are dicts mapping (n, m) to integer multiplicities, and
Omega[alphabet] is again such a factor product.
"""

from . import series
from .partitions import conjugate
from .cylindric import check_profile, cylindric_hooks, enumerate_cpps, cpp_weight, cpp_refined_weight, hook_exponent_vector, validate_cpp
from .paths import dc_alphabet


# ---------------------------------------------------------------------------
# factor products


def fp_mul(a, b):
    out = dict(a)
    for k, e in b.items():
        e2 = out.get(k, 0) + e
        if e2:
            out[k] = e2
        else:
            out.pop(k, None)
    return out


def fp_inv(a):
    return {k: -e for k, e in a.items()}


def fp_validate(a):
    for (n, m), e in a.items():
        assert (n, m) != (0, 0) and e != 0
    return a


def fp_is_one_at_q_equals_t(a):
    """Whether the product collapses to 1 after setting t = q."""
    by_degree = {}
    for (n, m), e in a.items():
        by_degree[n + m] = by_degree.get(n + m, 0) + e
    return all(v == 0 for v in by_degree.values())


def fp_set_q_zero(a):
    """Substitute q = 0; factors with a positive q-exponent become 1."""
    return {k: e for k, e in a.items() if k[0] == 0}


def fp_expand(a, keep):
    """Truncated series in (q, t)."""
    total = series.one(2)
    for (n, m), e in a.items():
        total = series.mul(total, series.binomial_factor((n, m), e, keep), keep)
    return total


def omega(alphabet):
    """Omega[a] = prod 1/(1 - q^n t^m)^a_nm as a factor product."""
    assert alphabet.get((0, 0), 0) == 0
    return {k: -c for k, c in alphabet.items() if c}


def alphabet_q_minus_t(alphabet):
    """Multiply an alphabet by (q - t)."""
    out = {}
    for (n, m), c in alphabet.items():
        for key, d in (((n + 1, m), c), ((n, m + 1), -c)):
            v = out.get(key, 0) + d
            if v:
                out[key] = v
            else:
                del out[key]
    return out


# ---------------------------------------------------------------------------
# Pieri coefficients


def _strip_columns(la, mu):
    lc = conjugate(la)
    mc = tuple(conjugate(mu)) + (0,) * len(lc)
    return [j for j in range(1, len(lc) + 1) if lc[j - 1] > mc[j - 1]]


def _arm_leg(la, s):
    i, j = s
    return la[i - 1] - j, sum(1 for a in la if a >= j) - i


def pieri_phi(la, mu):
    """Coefficient of the horizontal strip la/mu in the h-type Pieri rule."""
    cols = set(_strip_columns(la, mu))
    out = {}
    for shape, flip in ((la, False), (mu, True)):
        for i, part in enumerate(shape, 1):
            for j in range(1, part + 1):
                if j not in cols:
                    continue
                a, l = _arm_leg(shape, (i, j))
                num, den = ((a, l + 1), (a + 1, l))
                if flip:
                    num, den = den, num
                out = fp_mul(out, {num: 1} if num != den else {})
                out = fp_mul(out, {den: -1} if num != den else {})
    return fp_validate(out)


def pieri_psi(la, mu):
    """Companion coefficient over the columns the strip does not touch."""
    cols = set(_strip_columns(la, mu))
    out = {}
    for shape, flip in ((la, True), (mu, False)):
        for i, part in enumerate(shape, 1):
            for j in range(1, part + 1):
                if j in cols:
                    continue
                a, l = _arm_leg(shape, (i, j))
                num, den = ((a, l + 1), (a + 1, l))
                if flip:
                    num, den = den, num
                out = fp_mul(out, {num: 1} if num != den else {})
                out = fp_mul(out, {den: -1} if num != den else {})
    return fp_validate(out)


def weight_function(pi, seq):
    """Product of Pieri coefficients along the profile."""
    seq = validate_cpp(pi, seq)
    out = {}
    for k in range(1, len(pi) + 1):
        if pi[k - 1] == "1":
            out = fp_mul(out, pieri_phi(seq[k], seq[k - 1]))
        else:
            out = fp_mul(out, pieri_psi(seq[k - 1], seq[k]))
    return fp_validate(out)


def weight_alphabet_identity(pi, seq):
    """Check the weight equals Omega[(q - t) * peak/valley alphabet]."""
    lhs = weight_function(pi, seq)
    rhs = omega(alphabet_q_minus_t(dc_alphabet(pi, seq)))
    return lhs == rhs


# ---------------------------------------------------------------------------
# the (q, t) product identity


def qbinomial_column(k, keep):
    """prod_{i=1..k} (1 - t q^(i-1)) / (1 - q^i), truncated in (q, t)."""
    out = series.one(2)
    for i in range(1, k + 1):
        num = series.add(series.one(2), series.monomial((i - 1, 1), -1))
        out = series.mul(out, num, keep)
        out = series.mul(out, series.binomial_factor((i, 0), -1, keep), keep)
    return out


def pochhammer_ratio(h, max_weight, qt_cap):
    """(t z^h; q)_inf / (z^h; q)_inf as a series in (z, q, t)."""
    keep2 = series.degree_cap(qt_cap)
    out = {}
    k = 0
    while h * k <= max_weight:
        for (eq, et), c in qbinomial_column(k, keep2).items():
            out[(h * k, eq, et)] = out.get((h * k, eq, et), 0) + c
        k += 1
    return {k2: c for k2, c in out.items() if c}


def qt_borodin_rhs(pi, max_weight, qt_cap):
    """Hook side of the Macdonald identity, truncated."""
    check_profile(pi)
    T = len(pi)
    keep = lambda e: e[0] <= max_weight and e[1] + e[2] <= qt_cap
    total = series.one(3)
    for n in range(max_weight // T + 1):
        f = series.binomial_factor(((n + 1) * T, 0, 0), -1, keep)
        total = series.mul(total, f, keep)
    for h in cylindric_hooks(pi, max_weight):
        total = series.mul(total, pochhammer_ratio(h, max_weight, qt_cap), keep)
    return total


def qt_borodin_lhs(pi, max_weight, qt_cap):
    """Sum of z^|c| times the expanded weight over all small enough c."""
    keep2 = series.degree_cap(qt_cap)
    total = {}
    for seq in enumerate_cpps(pi, max_weight):
        w = cpp_weight(seq)
        expansion = fp_expand(weight_function(pi, seq), keep2)
        for (eq, et), c in expansion.items():
            key = (w, eq, et)
            v = total.get(key, 0) + c
            if v:
                total[key] = v
            else:
                del total[key]
    return total


def collapse_t_to_q(series3):
    """Set t = q in a (z, q, t) series."""
    out = {}
    for (w, eq, et), c in series3.items():
        key = (w, eq + et, 0)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]
    return out


def qt_refined_lhs(pi, max_weight, qt_cap):
    """Refined weights: exponent vector (|mu^1|, ..., |mu^T|) plus (q, t)."""
    keep2 = series.degree_cap(qt_cap)
    total = {}
    for seq in enumerate_cpps(pi, max_weight):
        vec = cpp_refined_weight(seq)
        expansion = fp_expand(weight_function(pi, seq), keep2)
        for (eq, et), c in expansion.items():
            key = vec + (eq, et)
            v = total.get(key, 0) + c
            if v:
                total[key] = v
            else:
                del total[key]
    return total


def qt_refined_rhs(pi, max_weight, qt_cap):
    check_profile(pi)
    T = len(pi)

    def keep(e):
        return sum(e[:T]) <= max_weight and e[T] + e[T + 1] <= qt_cap

    keep2 = series.degree_cap(qt_cap)
    total = series.one(T + 2)
    for n in range(max_weight // T + 1):
        f = series.binomial_factor(((n + 1),) * T + (0, 0), -1, keep)
        total = series.mul(total, f, keep)
    inv = [
        (i, j)
        for i in range(1, T + 1)
        for j in range(1, T + 1)
        if pi[i - 1] == "1" and pi[j - 1] == "0"
    ]
    for i, j in inv:
        w = 1 if j < i else 0
        while True:
            vec = hook_exponent_vector(pi, i, j, w)
            if sum(vec) > max_weight:
                break
            factor = {}
            k = 0
            while sum(vec) * k <= max_weight:
                for (eq, et), c in qbinomial_column(k, keep2).items():
                    key = tuple(k * v for v in vec) + (eq, et)
                    factor[key] = factor.get(key, 0) + c
                k += 1
            total = series.mul(total, factor, keep)
            w += 1
    return total
