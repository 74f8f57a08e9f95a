"""Non-intersecting lattice paths on a cylinder and their cubes.

A family is a list of (y0, steps) pairs ordered bottom to top; steps is a
string over '0'/'1', '1' meaning y increases by one.  Vertices of the lattice
have x and y of equal parity; the vertical reading at x recovers the boundary
profile of one layer of the corresponding cylindric plane partition
(occupied vertex = '1').
"""

from .partitions import conjugate, minimal_profile, partition_of_profile
from .cylindric import validate_cpp


def path_points(path):
    y0, steps = path
    ys = [y0]
    for s in steps:
        ys.append(ys[-1] + (1 if s == "1" else -1))
    return ys


def path_model_profile(pi):
    """Step string shared by all far-away paths of the family."""
    return "".join("1" if b == "0" else "0" for b in reversed(pi))


def cpp_to_paths(pi, seq):
    """Cylindric plane partition -> minimal family of paths."""
    seq = validate_cpp(pi, seq)
    T = len(pi)
    m = max(mu[0] if mu else 0 for mu in seq) + 1
    base = minimal_profile(seq[0])
    base += "1" * (m - base.count("1"))
    taus = [p for p, b in enumerate(base, 1) if b == "1"]
    conjs = [conjugate(mu) for mu in seq]

    def col(k, i):
        c = conjs[k]
        return c[i - 1] if i <= len(c) else 0

    paths = []
    for i in range(1, m + 1):
        ups = [col(k, i) - col(k - 1, i) + 1 - int(pi[k - 1]) for k in range(1, T + 1)]
        assert all(u in (0, 1) for u in ups)
        steps = "".join(str(u) for u in reversed(ups))
        paths.append((2 * taus[i - 1], steps))
    return paths


def occupancy(paths, x):
    ys = [path_points(p)[x] for p in paths]
    assert len(set(ys)) == len(ys), "intersecting paths"
    return ys


def vertical_reading(paths, x):
    """Occupation string at x, read bottom to top; '1' = occupied."""
    ys = occupancy(paths, x)
    lo, hi = min(ys), max(ys)
    occ = set(ys)
    return "".join("1" if y in occ else "0" for y in range(lo, hi + 1, 2))


def paths_to_cpp(pi, paths):
    """Recover the cylindric plane partition from its minimal path family."""
    T = len(pi)
    for y0, steps in paths:
        assert y0 % 2 == 0 and len(steps) == T
    layers = [
        partition_of_profile(vertical_reading(paths, x)) for x in range(T + 1)
    ]
    assert layers[0] == layers[T]
    # the vertical at x carries the layer mu^(T-x)
    seq = tuple(layers[(T - k) % T] for k in range(T)) + (layers[T],)
    return validate_cpp(pi, seq)


def classify_cubes(pi, paths):
    """All cubes (x, y1, y2) with arm, leg, level and class flags."""
    T = len(pi)
    pts = [path_points(p) for p in paths]
    out = []
    for x in range(T):
        ys = occupancy(paths, x)
        occ = set(ys)
        lo, hi = min(ys), max(ys)
        window = list(range(lo, hi + 1, 2))
        for y2 in window:
            if y2 in occ:
                continue
            for y1 in window:
                if y1 >= y2 or y1 not in occ:
                    continue
                between = [y for y in window if y1 < y < y2]
                arm = sum(1 for y in between if y in occ)
                leg = len(between) - arm
                k = next(idx for idx, p in enumerate(pts) if p[x] == y1)
                incoming = paths[k][1][x - 1] if x > 0 else paths[k][1][T - 1]
                outgoing = paths[k][1][x]
                # a path dipping to a local minimum carries a peak cube
                peak = incoming == "0" and outgoing == "1"
                valley = incoming == "1" and outgoing == "0"
                surface = arm == 0 and all(y not in occ for y in between)
                out.append(
                    {
                        "x": x,
                        "y1": y1,
                        "y2": y2,
                        "arm": arm,
                        "leg": leg,
                        "peak": peak,
                        "valley": valley,
                        "surface": surface,
                        "level": y2 - y1,
                    }
                )
    return out


def dc_alphabet(pi, seq):
    """Peak-minus-valley alphabet: dict (arm, leg) -> integer coefficient."""
    cubes = classify_cubes(pi, cpp_to_paths(pi, seq))
    out = {}
    for c in cubes:
        d = (1 if c["peak"] else 0) - (1 if c["valley"] else 0)
        if d:
            key = (c["arm"], c["leg"])
            v = out.get(key, 0) + d
            if v:
                out[key] = v
            else:
                del out[key]
    return out
