"""Diophantine labelings: a primitive rank-2 sublattice of N through eta for
every admissible discriminant d > 6, d = 0 or 2 mod 6.

Witness vectors live in the frame alpha_1, alpha_3, alpha_5, alpha_7 (norm 4,
orthogonal to eta), beta = eta - P - F_9 (norm 3, eta-degree 1) and
gamma = y - F_5 - ... - F_9 (norm 6, orthogonal to eta); for
v = sum x_i alpha_i + s beta + t gamma the span <eta, v> has discriminant
12(x_1^2+x_3^2+x_5^2+x_7^2) + 8 s^2 + 18 t^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import catalog
from .core import NoRepresentation, NotAHassettDiscriminant, saturation
from .report import CheckReport, run_certificate


def four_squares(n: int) -> tuple[int, int, int, int]:
    """A representation n = x^2+y^2+z^2+u^2 with x >= y >= z >= u, largest
    leading square first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for x in range(isqrt(n), -1, -1):
        r1 = n - x * x
        for y in range(min(x, isqrt(r1)), -1, -1):
            r2 = r1 - y * y
            for z in range(min(y, isqrt(r2)), -1, -1):
                r3 = r2 - z * z
                u = isqrt(r3)
                if u * u == r3 and u <= z:
                    return (x, y, z, u)
    raise AssertionError(f"no four-square representation found for {n}")


def ramanujan_rep(n: int) -> tuple[int, int, int, int]:
    """A representation n = 2x^2+2y^2+2z^2+3u^2; impossible exactly for 1, 17."""
    if n < 1:
        raise ValueError("n must be positive")
    for x in range(isqrt(n // 2), -1, -1):
        r1 = n - 2 * x * x
        for y in range(min(x, isqrt(r1 // 2)), -1, -1):
            r2 = r1 - 2 * y * y
            for z in range(min(y, isqrt(r2 // 2)), -1, -1):
                r3 = r2 - 2 * z * z
                if r3 % 3 == 0:
                    u = isqrt(r3 // 3)
                    if 3 * u * u == r3:
                        return (x, y, z, u)
    raise NoRepresentation(f"{n} is not of the form 2x^2+2y^2+2z^2+3u^2")


def is_admissible(d: int) -> bool:
    return d > 6 and d % 6 in (0, 2)


@dataclass(frozen=True)
class Labeling:
    """A verified discriminant-d labeling: v spans with eta a primitive rank-2
    sublattice of N of determinant d."""
    d: int
    v: tuple[int, ...]
    witness: object


def _frame_vectors():
    n = catalog.plane_lattice_N()
    rank = n.rank

    def f(i):
        return tuple(int(k == 1 + i) for k in range(rank))

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    alphas = [sub(f(1), f(2)), sub(f(3), f(4)), sub(f(5), f(6)), sub(f(7), f(8))]
    eta = tuple(int(k == 0) for k in range(rank))
    y = tuple(int(k == 1) for k in range(rank))
    p = catalog.p_in_N()
    beta = tuple(e - pp - f9 for e, pp, f9 in zip(eta, p, f(9)))
    gamma = tuple(yy - a - b - c - d_ - e for yy, a, b, c, d_, e in
                  zip(y, f(5), f(6), f(7), f(8), f(9)))
    return n, eta, y, alphas, beta, gamma


def _four_squares_even(m: int) -> tuple[int, int, int, int]:
    """A four-square representation of m with at least one even coordinate.

    One always exists: a zero coordinate counts, m = 4^a(8b+7) has one via
    m - 4 (three squares), and multiples of 4 via doubling a representation
    of m/4."""
    for x in range(isqrt(m), -1, -1):
        r1 = m - x * x
        for y in range(min(x, isqrt(r1)), -1, -1):
            r2 = r1 - y * y
            for z in range(min(y, isqrt(r2)), -1, -1):
                r3 = r2 - z * z
                u = isqrt(r3)
                if u * u == r3 and u <= z and any(c % 2 == 0 for c in (x, y, z, u)):
                    return (x, y, z, u)
    raise AssertionError(f"no even-coordinate four-square representation for {m}")


def _witness_rank0(k: int) -> tuple[int, int, int, int, int]:
    """(x1, x3, x5, x7, t) with k = 2(x1^2+..+x7^2) + 3t^2 for the eta-degree-0
    branch; a unit leading coordinate keeps the frame vector primitive."""
    if k % 2 == 0:
        if k == 2:
            return (1, 0, 0, 0, 0)
        x3, x5, x7, t = ramanujan_rep(k - 2)
        return (1, x3, x5, x7, t)
    x1, x3, x5, x7 = four_squares((k - 3) // 2)
    return (x1, x3, x5, x7, 1)


def _witness_rank1(n: int) -> tuple[int, int, int, int, int]:
    """(x1, x3, x5, x7, t) with n = 2(x1^2+..+x7^2) + 3t^2 for the eta-degree-1
    branch.  Here primitivity needs t odd or some x_i even: with s = 1 the
    frame coordinates are x_i + 1 and t, so an all-odd x with even t lands in
    2N + eta."""
    if n % 2 == 1:
        x1, x3, x5, x7 = four_squares((n - 3) // 2)
        return (x1, x3, x5, x7, 1)
    x1, x3, x5, x7 = _four_squares_even(n // 2)
    return (x1, x3, x5, x7, 0)


def labeling_for_d(d: int) -> Labeling:
    """The verified labeling of discriminant d; raises NotAHassettDiscriminant
    for d <= 6 or d = 1, 3, 4, 5 mod 6."""
    if not is_admissible(d):
        raise NotAHassettDiscriminant(
            f"d = {d} is not admissible (need d > 6 and d = 0 or 2 mod 6)")
    n, eta, y, alphas, beta, gamma = _frame_vectors()

    if d == 8:
        v = catalog.p_in_N()
        witness = "plane"
    elif d == 14:
        def f(i):
            return tuple(int(k == 1 + i) for k in range(n.rank))
        v = tuple(yy - a - b - c - e for yy, a, b, c, e in
                  zip(y, f(2), f(4), f(6), f(8)))
        witness = "y-F2-F4-F6-F8"
    else:
        k, r = divmod(d, 6)
        if r == 0:
            s = 0
            x1, x3, x5, x7, t = _witness_rank0(k)
        else:
            s = 1
            x1, x3, x5, x7, t = _witness_rank1(k - 1)
        witness = (x1, x3, x5, x7, s, t)
        coeffs = [x1, x3, x5, x7]
        v = tuple(sum(c * a[i] for c, a in zip(coeffs, alphas))
                  + s * beta[i] + t * gamma[i] for i in range(n.rank))

    vv, ev = n.norm(v), n.pair(eta, v)
    disc = 3 * vv - ev * ev
    assert disc == d, (d, disc, witness)
    sat = saturation(n, [eta, v])
    assert sat.lattice.rank == 2
    assert sat.lattice.det == d, (d, sat.lattice.det)
    return Labeling(d=d, v=v, witness=witness)


def sweep_rows(d_max: int):
    """Yield the verified labeling for every admissible d <= d_max."""
    for d in range(7, d_max + 1):
        if is_admissible(d):
            yield labeling_for_d(d)


def hassett_sweep(d_max: int) -> CheckReport:
    """Label and verify every admissible discriminant up to d_max."""
    def body():
        labeled = 0
        failures = []
        for d in range(7, d_max + 1):
            if not is_admissible(d):
                continue
            try:
                labeling_for_d(d)
                labeled += 1
            except Exception as exc:  # noqa: BLE001 - report, don't crash the sweep
                failures.append({"d": d, "error": str(exc)})
        details = {
            "d_max": d_max,
            "admissible": labeled + len(failures),
            "labeled": labeled,
            "failures": failures,
        }
        return not failures, details

    return run_certificate(
        "hassett.sweep",
        f"every admissible discriminant d <= {d_max} (d > 6, d = 0 or 2 mod 6) "
        "is realized by a verified primitive rank-2 labeling through eta",
        body)
