"""Command line verification harness.

Every command re-derives one family of identities and emits a JSON (or CSV)
report with one record per compared coefficient.  Exit codes: 0 all checks
match, 1 a mismatch was found, 2 usage or configuration error.
"""

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product

from . import asm as asmmod
from . import aztec
from . import correspondences as corr
from . import cylindric
from . import lambdadet
from . import partitions
from . import qtseries
from . import series


class CapExceeded(Exception):
    pass


class Budget(object):
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, n):
        self.used += n
        if self.used > self.cap:
            raise CapExceeded(
                "instance cap exceeded: %d > %d" % (self.used, self.cap)
            )


def frac_str(v):
    v = Fraction(v)
    return "%d/%d" % (v.numerator, v.denominator) if v.denominator != 1 else str(
        v.numerator
    )


def record(degree, lhs, rhs):
    return {
        "degree": str(degree),
        "lhs": frac_str(lhs),
        "rhs": frac_str(rhs),
        "match": Fraction(lhs) == Fraction(rhs),
    }


def mixed_profiles(max_t):
    for t in range(2, max_t + 1):
        for bits in product("01", repeat=t):
            pi = "".join(bits)
            if "0" in pi and "1" in pi:
                yield pi


def pure_profiles(max_t):
    for t in range(1, max_t + 1):
        yield "1" * t
        yield "0" * t


# ---------------------------------------------------------------------------
# checks; each returns a list of records


def check_borodin(pi, max_weight, budget):
    lhs = cylindric.borodin_lhs(pi, max_weight)
    budget.spend(sum(lhs))
    rhs = cylindric.borodin_rhs(pi, max_weight)
    return [
        record("%s:z^%d" % (pi, w), lhs[w], rhs[w])
        for w in range(max_weight + 1)
    ]


def check_qt_borodin(pi, max_weight, qt_degree, budget):
    lhs = qtseries.qt_borodin_lhs(pi, max_weight, qt_degree)
    budget.spend(len(cylindric.enumerate_cpps(pi, max_weight)))
    rhs = qtseries.qt_borodin_rhs(pi, max_weight, qt_degree)
    out = []
    for key in sorted(set(lhs) | {k for k in rhs if rhs[k]}):
        w, eq, et = key
        out.append(
            record(
                "%s:z^%d q^%d t^%d" % (pi, w, eq, et),
                lhs.get(key, 0),
                rhs.get(key, 0),
            )
        )
    collapsed = qtseries.collapse_t_to_q(lhs)
    counts = cylindric.borodin_lhs(pi, max_weight)
    for w in range(max_weight + 1):
        out.append(
            record(
                "%s:collapse z^%d" % (pi, w),
                collapsed.get((w, 0, 0), 0),
                counts[w],
            )
        )
    return out


def check_weight_simplification(pi, max_weight, budget):
    seqs = cylindric.enumerate_cpps(pi, max_weight)
    budget.spend(len(seqs))
    good = sum(1 for seq in seqs if qtseries.weight_alphabet_identity(pi, seq))
    return [record("%s:weight<=%d" % (pi, max_weight), good, len(seqs))]


def check_stanley(shape, max_weight, budget):
    if not shape:
        return [record("(empty):z^0", 1, 1)]
    pi = partitions.minimal_profile(shape)
    seqs = [
        seq for seq in cylindric.enumerate_cpps(pi, max_weight) if seq[0] == ()
    ]
    budget.spend(len(seqs))
    lhs = [0] * (max_weight + 1)
    for seq in seqs:
        lhs[cylindric.cpp_weight(seq)] += 1
    keep = series.degree_cap(max_weight)
    rhs = series.product(
        [
            series.binomial_factor((partitions.hook(shape, s),), -1, keep)
            for s in partitions.cells(shape)
        ],
        1,
        keep,
    )
    label = ",".join(str(p) for p in shape) or "empty"
    return [
        record("(%s):z^%d" % (label, w), lhs[w], rhs.get((w,), 0))
        for w in range(max_weight + 1)
    ]


def _count_plane_partitions(max_weight):
    shapes = partitions.partitions_upto(max_weight)
    counts = [0] * (max_weight + 1)
    counts[0] = 1

    def rec(prev, total):
        for row in shapes:
            w = sum(row)
            if 0 < w and total + w <= max_weight and partitions.contains(prev, row):
                counts[total + w] += 1
                rec(row, total + w)

    rec((max_weight,) * max_weight, 0)
    return counts


def check_macmahon(max_weight, budget):
    lhs = _count_plane_partitions(max_weight)
    budget.spend(sum(lhs))
    keep = series.degree_cap(max_weight)
    rhs = series.product(
        [
            series.binomial_factor((n,), -n, keep)
            for n in range(1, max_weight + 1)
        ],
        1,
        keep,
    )
    return [
        record("pp:z^%d" % w, lhs[w], rhs.get((w,), 0))
        for w in range(max_weight + 1)
    ]


def check_bijection(pi, max_weight, budget):
    t = len(pi)
    seqs = cylindric.enumerate_cpps(pi, max_weight)
    budget.spend(len(seqs))
    good = 0
    images = []
    for seq in seqs:
        gamma, labels, _ = cylindric.phi(pi, seq)
        w = cylindric.cpp_weight(seq)
        if (
            w == t * sum(gamma) + cylindric.alcd_weight(pi, labels)
            and cylindric.psi(pi, gamma, labels) == seq
        ):
            good += 1
        images.append((w, gamma, tuple(sorted(labels.items()))))
    out = [record("%s:round-trip" % pi, good, len(seqs))]
    # per weight class, image pairs are distinct and counts agree both ways
    by_weight = {}
    for w, gamma, labels in images:
        by_weight.setdefault(w, set()).add((gamma, labels))
    rhs_by_weight = {}
    for labels in cylindric.enumerate_alcds(pi, max_weight):
        base = cylindric.alcd_weight(pi, labels)
        for gamma in partitions.partitions_upto((max_weight - base) // t):
            w = t * sum(gamma) + base
            if w <= max_weight:
                rhs_by_weight[w] = rhs_by_weight.get(w, 0) + 1
    for w in range(max_weight + 1):
        n_lhs = sum(1 for s in seqs if cylindric.cpp_weight(s) == w)
        out.append(record("%s:class %d lhs" % (pi, w), len(by_weight.get(w, ())), n_lhs))
        out.append(
            record("%s:class %d rhs" % (pi, w), n_lhs, rhs_by_weight.get(w, 0))
        )
    return out


def check_refined_bijection(pi, max_weight, budget):
    t = len(pi)
    seqs = cylindric.enumerate_cpps(pi, max_weight)
    budget.spend(len(seqs))
    lhs = sorted(cylindric.cpp_refined_weight(s) for s in seqs)
    rhs = []
    for labels in cylindric.enumerate_alcds(pi, max_weight):
        base = cylindric.alcd_weight(pi, labels)
        for gamma in partitions.partitions_upto((max_weight - base) // t):
            vec = tuple(
                sum(gamma) + cylindric.diag_weight(pi, labels, k)
                for k in range(1, t + 1)
            )
            if sum(vec) <= max_weight:
                rhs.append(vec)
    good = int(lhs == sorted(rhs))
    return [record("%s:refined multiset" % pi, good, 1)]


def check_correspondences(budget):
    out = []
    perms = list(corr_permutations(5))
    budget.spend(len(perms))
    good = sum(
        1
        for p in perms
        if corr.reverse_robinson(*corr.robinson(p)) == tuple(p)
    )
    out.append(record("robinson:S5", good, len(perms)))
    for n in range(1, 7):
        total = 0
        for la in partitions.partitions_of(n):
            f = standard_count(la)
            total += f * f
        out.append(record("involution:n=%d" % n, total, factorial(n)))
    # column rule round trip with weight balance
    shapes = partitions.partitions_upto(8)
    good = total = 0
    for la in shapes:
        downs = partitions.hstrips_down(la)
        for alpha in downs:
            for beta in downs:
                total += 1
                m, mu = corr.burge_down(alpha, beta, la)
                balanced = sum(la) + sum(mu) == sum(alpha) + sum(beta) + m
                if balanced and corr.burge_up(alpha, beta, m, mu) == la:
                    good += 1
    budget.spend(total)
    out.append(record("column-rule:|la|<=8", good, total))
    # Cauchy counts: matrices with given row and column sums
    for size in (2, 3):
        for total_sum in range(5):
            lhs = rhs = 0
            rows_cols = [
                (r, c)
                for r in compositions(total_sum, size)
                for c in compositions(total_sum, size)
            ]
            for r, c in rows_cols:
                lhs += len(matrices_with_margins(r, c))
                rhs += sum(
                    ssyt_count(la, r) * ssyt_count(la, c)
                    for la in partitions.partitions_of(total_sum)
                    if len(la) <= size
                ) if total_sum else 1
            out.append(record("cauchy:%dx%d sum %d" % (size, size, total_sum), lhs, rhs))
    return out


def corr_permutations(n):
    from itertools import permutations

    return permutations(range(1, n + 1))


def factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def standard_count(la):
    n = sum(la)
    if n == 0:
        return 1
    total = 0
    for row in range(1, len(la) + 1):
        try:
            smaller = partitions.remove_box(la, row)
        except AssertionError:
            continue
        total += standard_count(smaller)
    return total


def compositions(n, k):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def matrices_with_margins(rows, cols):
    out = []

    def rec(i, remaining_cols, acc):
        if i == len(rows):
            if all(c == 0 for c in remaining_cols):
                out.append(tuple(acc))
            return
        for row in compositions(rows[i], len(cols)):
            if all(row[j] <= remaining_cols[j] for j in range(len(cols))):
                rec(
                    i + 1,
                    tuple(remaining_cols[j] - row[j] for j in range(len(cols))),
                    acc + [row],
                )

    rec(0, tuple(cols), [])
    return out


def ssyt_count(la, content):
    """Number of semistandard fillings of la with given content vector."""
    if sum(content) != sum(la):
        return 0
    counts = {(): 1}
    for k, c in enumerate(content):
        nxt = {}
        for prev, mult in counts.items():
            for mu in partitions.hstrips_up(prev, sum(prev) + c):
                if sum(mu) == sum(prev) + c:
                    nxt[mu] = nxt.get(mu, 0) + mult
        counts = nxt
    return counts.get(tuple(la), 0)


def check_asm(max_n, budget):
    out = []
    for n in range(max_n + 1):
        formula = asmmod.asm_count_formula(n)
        if n == 0:
            out.append(record("count:n=0", 1, formula))
            continue
        ms = asmmod.enumerate_asms(n)
        budget.spend(len(ms))
        out.append(record("count:n=%d" % n, len(ms), formula))
    for n in range(1, min(max_n, 4) + 1):
        good = total = 0
        for b in asmmod.enumerate_asms(n):
            total += 1
            if _asm_properties_hold(n, b):
                good += 1
        out.append(record("properties:n=%d" % n, good, total))
    return out


def _asm_properties_hold(n, b):
    bar = asmmod.left_corner_sums(b)
    under = asmmod.right_corner_sums(b)
    for i in range(1, n + 1):
        for j in range(1, n):
            if bar[i - 1][j - 1] + under[i - 1][j] != i:
                return False
    k = sum(1 for row in b for v in row if v == -1)
    for bits in product((0, 1), repeat=k):
        comp = tuple(1 - x for x in bits)
        if asmmod.left_below_family(b, bits) != asmmod.right_below_family(b, comp):
            return False
    if n >= 2:
        amin = asmmod.left_below_family(b, (0,) * k)
        amax = asmmod.left_below_family(b, (1,) * k)
        fb, fa = asmmod.f_weight_exponents(b), asmmod.f_weight_exponents(amin)
        gb, ga = asmmod.g_weight_exponents(b), asmmod.g_weight_exponents(amax)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                prev = fa[i - 2][j - 2] if i >= 2 and j >= 2 else 0
                if fb[i - 1][j - 1] - prev != int(asmmod.is_inversion(b, i, j)):
                    return False
                prev = ga[i - 2][j - 1] if i >= 2 and j <= n - 1 else 0
                if gb[i - 1][j - 1] - prev != int(
                    asmmod.is_dual_inversion(b, i, j)
                ):
                    return False
    return True


def check_aztec(max_n, budget):
    out = []
    for n in range(1, max_n + 1):
        tilings = aztec.enumerate_tilings(n)
        budget.spend(len(tilings))
        out.append(record("count:n=%d" % n, len(tilings), 2 ** (n * (n + 1) // 2)))
        ordered = sorted(tilings)
        stride = max(1, len(ordered) // 32) if n >= 4 else 1
        sample = ordered[::stride]
        good = 0
        for t in sample:
            a, b = aztec.tiling_to_asms(n, t)
            if aztec.asms_to_tiling(n, a, b) == t:
                good += 1
        out.append(record("round-trip:n=%d" % n, good, len(sample)))
        s = sum(
            2 ** sum(1 for row in b for v in row if v == -1)
            for b in asmmod.enumerate_asms(n + 1)
        )
        out.append(record("sign-count:n=%d" % n, s, len(tilings)))
    return out


def check_lambda_det(max_n, points, seed, budget):
    out = []
    rng = random.Random(seed)

    def rnd():
        v = 0
        while v == 0:
            v = rng.randint(-9, 9)
        return Fraction(v)

    for n in range(2, max_n + 1):
        good = 0
        budget.spend(points)
        done = 0
        while done < points:
            lam = [[rnd() for _ in range(n)] for _ in range(n)]
            mu = [[rnd() for _ in range(n)] for _ in range(n)]
            x = [[rnd() for _ in range(n)] for _ in range(n)]
            y = [[rnd() for _ in range(n + 1)] for _ in range(n + 1)]
            try:
                levels = lambdadet.pyramid(n, lam, mu, x, y)
            except (ZeroDivisionError, AssertionError):
                continue
            done += 1
            if all(
                levels[k][0][0]
                == lambdadet.closed_form_value(n, k, lam, mu, x, y)
                for k in range(1, n + 1)
            ):
                good += 1
        out.append(record("numeric:n=%d" % n, good, points))
    for n in range(2, min(max_n, 3) + 1):
        levels = lambdadet.symbolic_pyramid(n)
        good = sum(
            1
            for k in range(1, n + 1)
            if levels[k][0][0]
            == lambdadet.Rat(lambdadet.closed_form_symbolic(n, k))
        )
        out.append(record("symbolic:n=%d" % n, good, n))
    for n in range(2, min(max_n, 3) + 1):
        lam = [
            [lambdadet.rat_var(("l", 0, 0))] * n for _ in range(n)
        ]
        mu = [[lambdadet.Rat(lambdadet.lp_const(1))] * n for _ in range(n)]
        x = [
            [lambdadet.rat_var(("x", i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        y = [[lambdadet.Rat(lambdadet.lp_const(1))] * (n + 1) for _ in range(n + 1)]
        apex = lambdadet.pyramid(n, lam, mu, x, y)[n][0][0]
        want = _robbins_rumsey_symbolic(n)
        out.append(record("one-parameter:n=%d" % n, int(apex == want), 1))
    for n in range(1, max_n + 1):
        m = [[rnd() for _ in range(n)] for _ in range(n)]
        out.append(
            record(
                "determinant:n=%d" % n,
                lambdadet.lambda_determinant(n, m),
                lambdadet.det_cofactor(m),
            )
        )
    return out


def _robbins_rumsey_symbolic(n):
    total = lambdadet.lp_const(0)
    lam = lambdadet.lp_monomial({("l", 0, 0): 1})
    one_plus = lambdadet.lp_add(lambdadet.lp_const(1), lam)
    for b in asmmod.enumerate_asms(n):
        exps = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if b[i - 1][j - 1]:
                    exps[("x", i, j)] = b[i - 1][j - 1]
        term = lambdadet.lp_monomial(exps)
        for _ in asmmod.inversions(b):
            term = lambdadet.lp_mul(term, lam)
        for _ in range(sum(1 for row in b for v in row if v == -1)):
            term = lambdadet.lp_mul(term, one_plus)
        total = lambdadet.lp_add(total, term)
    return lambdadet.Rat(total)


# ---------------------------------------------------------------------------
# enumerate command serializers


def emit_partition(la):
    return list(la)


def emit_cpp(pi, seq):
    return {"profile": pi, "seq": [list(mu) for mu in seq]}


def emit_alcd(pi, labels):
    return {
        "profile": pi,
        "labels": [[i, j, w, m] for (i, j, w), m in sorted(labels.items())],
    }


def emit_tiling(tiling):
    return [
        {"x": x, "y": y, "dir": kind}
        for kind, x, y in sorted(tiling, key=lambda d: (d[1], d[2], d[0]))
    ]


def run_enumerate(args, budget):
    kind = args.kind
    if kind == "partitions":
        items = [emit_partition(la) for la in partitions.partitions_upto(args.max_weight)]
    elif kind == "cpps":
        require_profile(args)
        items = [
            emit_cpp(args.profile, seq)
            for seq in sorted(cylindric.enumerate_cpps(args.profile, args.max_weight))
        ]
    elif kind == "alcds":
        require_profile(args)
        items = [
            emit_alcd(args.profile, labels)
            for labels in sorted(
                cylindric.enumerate_alcds(args.profile, args.max_weight),
                key=lambda l: sorted(l.items()),
            )
        ]
    elif kind == "asms":
        items = [
            [list(row) for row in m] for m in sorted(asmmod.enumerate_asms(args.n))
        ]
    elif kind == "tilings":
        items = [
            emit_tiling(t) for t in sorted(aztec.enumerate_tilings(args.n))
        ]
    else:
        raise SystemExit(2)
    budget.spend(len(items))
    return items


def require_profile(args):
    if not args.profile:
        print("error: --profile required", file=sys.stderr)
        raise SystemExit(2)


# ---------------------------------------------------------------------------
# driver


def build_parser():
    p = argparse.ArgumentParser(prog="partition-forge")
    sub = p.add_subparsers(dest="command", required=True)
    commands = [
        "verify-borodin",
        "verify-qt-borodin",
        "verify-stanley",
        "verify-macmahon",
        "verify-bijection",
        "verify-correspondences",
        "verify-asm",
        "verify-lambda-det",
        "verify-aztec",
        "enumerate",
    ]
    for name in commands:
        q = sub.add_parser(name)
        q.add_argument("--profile", default=None)
        q.add_argument("--max-weight", type=int, default=None)
        q.add_argument("--qt-degree", type=int, default=None)
        q.add_argument("--n", type=int, default=None)
        q.add_argument("--points", type=int, default=20)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--out", default=None)
        q.add_argument("--format", choices=("json", "csv"), default="json")
        q.add_argument("--perturb", action="store_true")
        q.add_argument("--max-instances", type=int, default=10 ** 6)
        if name == "enumerate":
            q.add_argument(
                "--kind",
                choices=("partitions", "cpps", "alcds", "asms", "tilings"),
                default="partitions",
            )
    return p


def valid_profile(pi):
    return pi and set(pi) <= {"0", "1"}


def profiles_for(args, default_t, mixed_only=False):
    if args.profile is not None:
        if not valid_profile(args.profile):
            print("error: malformed profile %r" % args.profile, file=sys.stderr)
            raise SystemExit(2)
        return [args.profile]
    out = list(mixed_profiles(default_t))
    if not mixed_only:
        out += list(pure_profiles(default_t))
    return out


def build_tasks(args, budget):
    cmd = args.command
    if cmd == "verify-borodin":
        w = args.max_weight if args.max_weight is not None else 12
        return [
            ("borodin %s" % pi, lambda pi=pi: check_borodin(pi, w, budget))
            for pi in profiles_for(args, 5)
        ]
    if cmd == "verify-qt-borodin":
        w = args.max_weight if args.max_weight is not None else 8
        d = args.qt_degree if args.qt_degree is not None else 8
        return [
            (
                "qt-borodin %s" % pi,
                lambda pi=pi: check_qt_borodin(pi, w, d, budget),
            )
            for pi in profiles_for(args, 4, mixed_only=True)
        ]
    if cmd == "verify-stanley":
        w = args.max_weight if args.max_weight is not None else 12
        shapes = [
            la
            for la in partitions.partitions_upto(args.n if args.n else 8)
        ]
        return [
            (
                "stanley %r" % (la,),
                lambda la=la: check_stanley(la, w, budget),
            )
            for la in shapes
        ] + [
            (
                "weight-simplification",
                lambda: sum(
                    (
                        check_weight_simplification(pi, min(w, 8), budget)
                        for pi in mixed_profiles(5)
                    ),
                    [],
                ),
            )
        ]
    if cmd == "verify-macmahon":
        w = args.max_weight if args.max_weight is not None else 8
        return [("macmahon", lambda: check_macmahon(w, budget))]
    if cmd == "verify-bijection":
        w = args.max_weight if args.max_weight is not None else 10
        tasks = [
            ("bijection %s" % pi, lambda pi=pi: check_bijection(pi, w, budget))
            for pi in profiles_for(args, 4, mixed_only=True)
        ]
        tasks += [
            (
                "refined %s" % pi,
                lambda pi=pi: check_refined_bijection(pi, min(w, 6), budget),
            )
            for pi in (
                [args.profile]
                if args.profile is not None
                else list(mixed_profiles(3))
            )
        ]
        return tasks
    if cmd == "verify-correspondences":
        return [("correspondences", lambda: check_correspondences(budget))]
    if cmd == "verify-asm":
        n = args.n if args.n is not None else 5
        return [("asm", lambda: check_asm(n, budget))]
    if cmd == "verify-aztec":
        n = args.n if args.n is not None else 5
        return [("aztec", lambda: check_aztec(n, budget))]
    if cmd == "verify-lambda-det":
        n = args.n if args.n is not None else 4
        return [
            (
                "lambda-det",
                lambda: check_lambda_det(n, args.points, args.seed, budget),
            )
        ]
    raise SystemExit(2)


def assemble_report(args, records):
    if args.perturb and records:
        flipped = dict(records[0])
        flipped["lhs"] = frac_str(Fraction(flipped["lhs"]) + 1)
        flipped["match"] = Fraction(flipped["lhs"]) == Fraction(flipped["rhs"])
        records = [flipped] + records[1:]
    bounds = {}
    for field in ("max_weight", "qt_degree", "n", "points", "seed"):
        v = getattr(args, field, None)
        if v is not None:
            bounds[field.replace("_", "-")] = v
    return {
        "mode": args.command,
        "profile": args.profile or "",
        "bounds": bounds,
        "coefficients": records,
        "ok": all(r["match"] for r in records),
    }


def emit(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    lines = ["degree,lhs,rhs,match"]
    for r in report["coefficients"]:
        lines.append(
            "%s,%s,%s,%s" % (r["degree"], r["lhs"], r["rhs"], str(r["match"]).lower())
        )
    lines.append("ok,%s" % str(report["ok"]).lower())
    return "\n".join(lines) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    budget = Budget(args.max_instances)
    try:
        return _run(args, budget)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2


def _run(args, budget):
    try:
        if args.command == "enumerate":
            items = run_enumerate(args, budget)
            text = json.dumps(items, indent=2, sort_keys=False) + "\n"
            if args.out:
                with open(args.out, "w") as f:
                    f.write(text)
            else:
                sys.stdout.write(text)
            return 0
        tasks = build_tasks(args, budget)
        threads = int(os.environ.get("PARTITION_FORGE_THREADS", "1"))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                chunks = list(pool.map(lambda t: t[1](), tasks))
        else:
            chunks = [fn() for _, fn in tasks]
    except CapExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except AssertionError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    records = [r for chunk in chunks for r in chunk]
    report = assemble_report(args, records)
    text = emit(report, args.format)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
