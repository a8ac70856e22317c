"""Named lattice constructors.

Standard root/hyperbolic families plus the specific Gram matrices of the
cubic-fourfold computation: the algebraic lattice N spanned by the square of
the hyperplane class, the half-sum class y and nine fiber plane classes; its
primitive part M; the scroll lattices K_tau; and the associated transcendental
and K3-side models.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .core import (
    IntegralLattice,
    UnknownLattice,
    basic_invariants,
    direct_sum,
    discriminant_form,
    orthogonal_complement,
    rescale,
)
from .glue import glue_subgroup, overlattice_from_glue

_STD = re.compile(r"^(?P<fam>[ADE])(?P<n>\d+)$")
_BRACKET = re.compile(r"^<(?P<k>-?\d+)>$")
_SCALED = re.compile(r"^(?P<base>.+)\((?P<s>-?\d+)\)$")


def _chain_gram(n: int) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    return g


def _tree_gram(arms: tuple[int, ...]) -> list[list[int]]:
    """Gram matrix of the simply laced tree with the given arm lengths."""
    n = 1 + sum(arms)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    pos = 1
    for arm in arms:
        prev = 0
        for _ in range(arm):
            g[prev][pos] = g[pos][prev] = -1
            prev = pos
            pos += 1
    return g


def standard(name: str, scale: int = 1) -> IntegralLattice:
    """A standard lattice by name: An, Dn, E6/E7/E8, U, or <k> for rank one.

    A trailing ``(s)`` in the name multiplies the form, as does ``scale``;
    ``standard("E8(2)")`` and ``standard("E8", 2)`` agree.
    """
    m = _SCALED.match(name)
    if m:
        return standard(m.group("base"), scale * int(m.group("s")))
    if name == "U":
        lat = IntegralLattice([[0, 1], [1, 0]], labels=["u1", "u2"])
    elif (m := _BRACKET.match(name)):
        lat = IntegralLattice([[int(m.group("k"))]], labels=["g"])
    elif (m := _STD.match(name)):
        fam, n = m.group("fam"), int(m.group("n"))
        if fam == "A" and n >= 1:
            gram = _chain_gram(n)
        elif fam == "D" and n >= 4:
            gram = _tree_gram((1, 1, n - 3))
        elif fam == "E" and n in (6, 7, 8):
            gram = _tree_gram((1, 2, n - 4))
        else:
            raise UnknownLattice(f"no standard lattice {name!r} (need A n>=1, "
                                 f"D n>=4, E n in 6..8)")
        lat = IntegralLattice(gram, labels=[f"{fam.lower()}{i+1}" for i in range(n)])
    else:
        raise UnknownLattice(f"cannot parse lattice name {name!r}")
    if scale != 1:
        lat = rescale(lat, scale)
    return lat


# Pairing rules for the symbol basis (eta, P, F_1..F_9): every class has norm
# 3, eta pairs to 1 with each plane class, P meets each fiber plane in -1, and
# distinct fiber planes meet in 1.
def _symbol_pairing() -> list[list[int]]:
    s = [[1] * 11 for _ in range(11)]
    for i in range(11):
        s[i][i] = 3
    for j in range(2, 11):
        s[1][j] = s[j][1] = -1
    return s


@lru_cache(maxsize=None)
def plane_lattice_N() -> IntegralLattice:
    """The rank-11 algebraic lattice with basis (eta, y, F_1..F_9).

    y is the half-sum (P + F_1 + ... + F_9)/2; P itself is the derived vector
    2y - sum(F_i).
    """
    s = _symbol_pairing()
    half = Fraction(1, 2)
    basis = [[Fraction(0)] * 11 for _ in range(11)]
    basis[0][0] = Fraction(1)
    for j in range(1, 11):
        basis[1][j] = half
    for i in range(2, 11):
        basis[i][i] = Fraction(1)
    gram = []
    for a in range(11):
        row = []
        for b in range(11):
            val = sum(basis[a][i] * s[i][j] * basis[b][j]
                      for i in range(11) for j in range(11))
            assert val.denominator == 1
            row.append(int(val))
        gram.append(row)
    labels = ["eta", "y"] + [f"F{i}" for i in range(1, 10)]
    return IntegralLattice(gram, labels=labels)


def p_in_N() -> tuple[int, ...]:
    """The plane class P in the (eta, y, F_i) basis: P = 2y - sum(F_i)."""
    return (0, 2) + (-1,) * 9


def delta_in_N() -> tuple[int, ...]:
    """The norm-24 class eta - 3P."""
    p = p_in_N()
    return tuple(e - 3 * q for e, q in zip((1,) + (0,) * 10, p))


def delta_in_M() -> tuple[int, ...]:
    """The norm-24 class eta - 3P in the (x, alpha_1..alpha_9) basis of M.

    Derived from delta_in_N by pairing against the M-basis and applying the
    inverse Gram matrix; the coordinates come out integral because delta is
    orthogonal to eta and therefore lies in M.
    """
    n = plane_lattice_N()
    basis = m_basis_in_N()
    rhs = [n.pair(delta_in_N(), v) for v in basis]
    ginv = prim_lattice_M().inverse_gram
    coords = [sum(ginv[i][j] * rhs[j] for j in range(10)) for i in range(10)]
    assert all(c.denominator == 1 for c in coords)
    return tuple(int(c) for c in coords)


def m_basis_in_N() -> list[tuple[int, ...]]:
    """The basis (x, alpha_1..alpha_9) of M written in N's coordinates.

    alpha_i = F_i - F_{i+1} for i <= 8, alpha_9 = P + F_8 + F_9 - eta, and
    x = (alpha_1 + alpha_3 + alpha_5 + alpha_7 + F_9 - P)/2.
    """
    def f(i):
        v = [0] * 11
        v[1 + i] = 1
        return v

    alphas = []
    for i in range(1, 9):
        v = [a - b for a, b in zip(f(i), f(i + 1))]
        alphas.append(v)
    p = list(p_in_N())
    a9 = [pp + x8 + x9 - e for pp, x8, x9, e in
          zip(p, f(8), f(9), [1] + [0] * 10)]
    alphas.append(a9)
    two_x = [alphas[0][k] + alphas[2][k] + alphas[4][k] + alphas[6][k]
             + f(9)[k] - p[k] for k in range(11)]
    assert all(c % 2 == 0 for c in two_x)
    x = [c // 2 for c in two_x]
    return [tuple(x)] + [tuple(a) for a in alphas]


_GM = [
    [6, 2, -2, 2, -2, 2, -2, 2, -2, 0],
    [2, 4, -2, 0, 0, 0, 0, 0, 0, 0],
    [-2, -2, 4, -2, 0, 0, 0, 0, 0, 0],
    [2, 0, -2, 4, -2, 0, 0, 0, 0, 0],
    [-2, 0, 0, -2, 4, -2, 0, 0, 0, 0],
    [2, 0, 0, 0, -2, 4, -2, 0, 0, 0],
    [-2, 0, 0, 0, 0, -2, 4, -2, 0, 0],
    [2, 0, 0, 0, 0, 0, -2, 4, -2, -2],
    [-2, 0, 0, 0, 0, 0, 0, -2, 4, 0],
    [0, 0, 0, 0, 0, 0, 0, -2, 0, 4],
]


def alpha_d9_2() -> IntegralLattice:
    """D9 doubled, in the alpha-chain basis with the fork at alpha_7."""
    g = [[0] * 9 for _ in range(9)]
    for i in range(9):
        g[i][i] = 4
    for i in range(7):
        g[i][i + 1] = g[i + 1][i] = -2
    g[6][8] = g[8][6] = -2
    return IntegralLattice(g, labels=[f"a{i}" for i in range(1, 10)])


@lru_cache(maxsize=None)
def kappa_tilde() -> IntegralLattice:
    """The index-4 sublattice <24> + D9(2) of M, basis (delta, alpha_1..alpha_9)."""
    return direct_sum(IntegralLattice([[24]], labels=["delta"]), alpha_d9_2())


def kappa_glue_lift() -> tuple[Fraction, ...]:
    """Dual-vector lift of the order-4 glue class 6*xi + 2*beta of kappa_tilde.

    xi is the dual generator delta/24 and beta the dual basis vector of
    alpha_9.
    """
    kt = kappa_tilde()
    ginv = kt.inverse_gram
    return tuple(6 * ginv[i][0] + 2 * ginv[i][9] for i in range(10))


@lru_cache(maxsize=None)
def prim_lattice_M() -> IntegralLattice:
    """The rank-10 primitive algebraic lattice, basis (x, alpha_1..alpha_9).

    The Gram matrix is cross-checked on first build against two independent
    constructions: the orthogonal complement of eta in N, and the glue of
    kappa_tilde by its order-4 isotropic class.
    """
    labels = ["x"] + [f"a{i}" for i in range(1, 10)]
    lat = IntegralLattice(_GM, labels=labels)

    n = plane_lattice_N()
    basis = m_basis_in_N()
    eta = (1,) + (0,) * 10
    for v in basis:
        assert n.pair(v, eta) == 0
    regram = [[n.pair(v, w) for w in basis] for v in basis]
    assert regram == _GM, "basis change into N does not reproduce the Gram matrix"
    comp = orthogonal_complement(n, [eta])
    assert basic_invariants(comp.lattice) == basic_invariants(lat)

    kt = kappa_tilde()
    sub = glue_subgroup(discriminant_form(kt), [kappa_glue_lift()])
    assert sub.order == 4
    glued = overlattice_from_glue(kt, sub)
    assert glued.index == 4
    assert basic_invariants(glued.lattice) == basic_invariants(lat)
    return lat


def scroll_lattice_K(tau: int) -> IntegralLattice:
    """Rank-3 span of eta and two scroll classes meeting in tau points."""
    gram = [[3, 3, 3], [3, 7, tau], [3, tau, 7]]
    return IntegralLattice(gram, labels=["eta", "T1", "T2"])


def eckardt_E6_2() -> IntegralLattice:
    """E6(2): the primitive algebraic lattice of the Eckardt involution."""
    return standard("E6", 2)


@lru_cache(maxsize=None)
def transcendental_T() -> IntegralLattice:
    """E8(2) + A1 + A1(-1) + U, the transcendental lattice model."""
    return direct_sum(standard("E8", 2), standard("A1"), standard("A1", -1),
                      standard("U"))


@lru_cache(maxsize=None)
def k3_lattice() -> IntegralLattice:
    """The even unimodular lattice of signature (3,19): U^3 + E8(-1)^2."""
    return direct_sum(standard("U"), standard("U"), standard("U"),
                      standard("E8", -1), standard("E8", -1))


def nodal_sextic_NS() -> IntegralLattice:
    """<2> + <-2>^9 on the basis (h, e_1..e_9) of a nodal-sextic double plane."""
    gram = [[0] * 10 for _ in range(10)]
    gram[0][0] = 2
    for i in range(1, 10):
        gram[i][i] = -2
    return IntegralLattice(gram, labels=["h"] + [f"e{i}" for i in range(1, 10)])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: object
    description: str
    symbols: tuple[tuple[str, str], ...] = ()


CATALOG: dict[str, CatalogEntry] = {}


def _register(name, builder, description, symbols=()):
    CATALOG[name] = CatalogEntry(name=name, builder=builder,
                                 description=description,
                                 symbols=tuple(symbols))


_register("N", plane_lattice_N,
          "rank-11 algebraic lattice of the fibered involution model",
          [("eta", "square of the hyperplane class"),
           ("y", "half-sum (P + F_1 + ... + F_9)/2"),
           ("F1..F9", "fiber plane classes")])
_register("M", prim_lattice_M,
          "primitive part of N, the complement of eta",
          [("x", "half-sum (alpha_1+alpha_3+alpha_5+alpha_7+F_9-P)/2"),
           ("a1..a9", "differences of plane classes spanning a doubled D9")])
_register("Ktilde", kappa_tilde,
          "index-4 sublattice <24> + D9(2) of M",
          [("delta", "norm-24 class eta - 3P"),
           ("a1..a9", "doubled D9 chain with fork at a7")])
_register("T", transcendental_T,
          "transcendental lattice E8(2) + A1 + A1(-1) + U", ())
_register("K3", k3_lattice, "even unimodular lattice U^3 + E8(-1)^2", ())
_register("NS", nodal_sextic_NS,
          "Neron-Severi lattice <2> + <-2>^9 of a 9-nodal sextic double plane",
          [("h", "pulled-back line class"), ("e1..e9", "exceptional classes")])
for _tau in range(7):
    _register(f"Ktau{_tau}", (lambda t: (lambda: scroll_lattice_K(t)))(_tau),
              f"rank-3 scroll lattice with scroll product tau = {_tau}",
              [("eta", "square of the hyperplane class"),
               ("T1", "first scroll class"), ("T2", "second scroll class")])


def resolve(name: str) -> IntegralLattice:
    """Look up a catalog name, falling back to the standard-family parser."""
    entry = CATALOG.get(name)
    if entry is not None:
        return entry.builder()
    try:
        return standard(name)
    except UnknownLattice:
        names = ", ".join(sorted(CATALOG))
        raise UnknownLattice(
            f"unknown lattice {name!r}; catalog names: {names}; or a standard "
            f"name like A5, D9, E8, U, <24>, E8(2)") from None
