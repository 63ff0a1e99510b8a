"""Exact rational LP feasibility: is a target vector a nonnegative combination
of given vectors?  Phase-1 simplex over Fractions with Bland's rule."""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def independent_cone_solve(vectors, target):
    """For a candidate basis: None if the vectors are linearly dependent, else
    True/False for 'target is a nonnegative combination' (unique solution)."""
    d = len(target)
    k = len(vectors)
    aug = [[Fraction(vectors[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(d)]
    r = 0
    pivots = []
    for c in range(k):
        p = next((i for i in range(r, d) if aug[i][c] != 0), None)
        if p is None:
            return None  # dependent (or zero column)
        aug[r], aug[p] = aug[p], aug[r]
        pr = aug[r][c]
        aug[r] = [x / pr for x in aug[r]]
        for i in range(d):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, d):
        if aug[i][k] != 0:
            return False  # inconsistent
    return all(aug[i][k] >= 0 for i in range(r))


def nonneg_combination_exists(vectors, target):
    """True iff target = sum c_v * v with all c_v >= 0 (exact arithmetic)."""
    d = len(target)
    n = len(vectors)
    if all(t == 0 for t in target):
        return True
    if n == 0:
        return False
    # rows: constraints sum_j c_j * v_j[i] = target[i], with rhs made nonnegative
    T = []
    for i in range(d):
        row = [Fraction(v[i]) for v in vectors]
        rhs = Fraction(target[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [ZERO] * d + [rhs])
    for i in range(d):
        T[i][n + i] = ONE
    basis = list(range(n, n + d))
    ncols = n + d + 1
    # reduced-cost row for minimizing the artificial sum: c_j - sum_i T[i][j]
    z = [ZERO] * ncols
    for j in range(n + d):
        s = ZERO
        for i in range(d):
            s += T[i][j]
        z[j] = (ONE if j >= n else ZERO) - s

    def objective():
        return sum(T[i][-1] for i in range(d) if basis[i] >= n)

    while True:
        enter = -1
        for j in range(n + d):
            if z[j] < 0:
                enter = j
                break  # Bland: smallest index
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(d):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best
                                                    and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # unbounded in phase 1 cannot happen (objective bounded below by 0)
            return False
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(d):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        if z[enter] != 0:
            f = z[enter]
            z = [x - f * y for x, y in zip(z, T[leave])]
        basis[leave] = enter
    return objective() == 0
