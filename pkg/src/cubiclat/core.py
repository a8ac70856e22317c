"""Integral lattices with exact arithmetic.

An integral lattice is a free Z-module of finite rank carrying a symmetric
integer Gram matrix with nonzero determinant.  Vectors are integer coordinate
tuples in the lattice basis; dual vectors are rational coordinate tuples in the
same basis.  All values (determinants, signatures, discriminant-form values)
are exact: ints and fractions.Fraction throughout, floats nowhere.

Conventions:
  - discriminant quadratic values live in Q/2Z, reduced into [0, 2);
  - discriminant bilinear values live in Q/Z, reduced into [0, 1);
  - discriminant-group generator lifts are the unique dual-lattice
    representatives with all coordinates in [0, 1).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, prod
from typing import Iterator, NamedTuple, Sequence

from . import exact

ENUMERATION_GUARD = 2 ** 20


class LatticeError(Exception):
    pass


class DegenerateLattice(LatticeError):
    pass


class ParityError(LatticeError):
    pass


class NotIntegral(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


class DependentSpan(LatticeError):
    pass


class IndefiniteLattice(LatticeError):
    pass


class NotRootGenerated(LatticeError):
    pass


class NotIsotropic(LatticeError):
    pass


class TooLarge(LatticeError):
    pass


class BadSplitting(LatticeError):
    pass


class Not2Elementary(LatticeError):
    pass


class DoesNotFit(LatticeError):
    pass


class NoRepresentation(LatticeError):
    pass


class NotAHassettDiscriminant(LatticeError):
    pass


class UnknownLattice(LatticeError):
    pass


class Signature(NamedTuple):
    positive: int
    negative: int


class Invariants(NamedTuple):
    determinant: int
    signature: Signature
    parity: str  # "even" | "odd"


def _coords(v) -> tuple[int, ...]:
    if isinstance(v, LatticeVector):
        return v.coords
    return tuple(int(x) for x in v)


class IntegralLattice:
    """A finite-rank lattice given by a symmetric nondegenerate integer Gram."""

    def __init__(self, gram: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None,
                 name: str | None = None):
        rows = [tuple(int(x) for x in row) for row in gram]
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"gram row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"gram is not symmetric: entry ({i},{j}) = {rows[i][j]} "
                        f"but ({j},{i}) = {rows[j][i]}")
        if labels is None:
            labels = tuple(f"e{i+1}" for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError(f"{len(labels)} labels for rank {n}")
        if len(set(labels)) != n:
            raise ValueError("labels are not pairwise distinct")
        self.gram: tuple[tuple[int, ...], ...] = tuple(rows)
        self.labels = labels
        self.name = name
        self.rank = n
        det = exact.bareiss_det([list(r) for r in rows])
        if det == 0:
            raise DegenerateLattice("gram matrix has determinant zero")
        self.det = det

    def __eq__(self, other):
        return (isinstance(other, IntegralLattice)
                and self.gram == other.gram and self.labels == other.labels)

    def __hash__(self):
        return hash((self.gram, self.labels))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<IntegralLattice{tag} rank {self.rank} det {self.det}>"

    def pair(self, u, v) -> int:
        uc, vc = _coords(u), _coords(v)
        g = self.gram
        return sum(uc[i] * g[i][j] * vc[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v) -> int:
        return self.pair(v, v)

    def pair_rational(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        g = self.gram
        return sum(Fraction(u[i]) * g[i][j] * Fraction(v[j])
                   for i in range(self.rank) for j in range(self.rank))

    def dual_pairings(self, v) -> tuple[int, ...]:
        """The pairings of v with each basis vector, i.e. gram times v."""
        return tuple(exact.mat_vec([list(r) for r in self.gram], list(_coords(v))))

    def vector(self, coords) -> "LatticeVector":
        return LatticeVector(self, _coords(coords))

    def basis_vector(self, label: str) -> "LatticeVector":
        i = self.labels.index(label)
        return LatticeVector(self, tuple(int(j == i) for j in range(self.rank)))

    @cached_property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    @cached_property
    def signature(self) -> Signature:
        return signature_of_gram(self.gram)

    @cached_property
    def inverse_gram(self) -> list[list[Fraction]]:
        return exact.frac_inverse(self.gram)

    def is_positive_definite(self) -> bool:
        return self.signature == (self.rank, 0)

    def is_negative_definite(self) -> bool:
        return self.signature == (0, self.rank)


@dataclass(frozen=True)
class LatticeVector:
    ambient: IntegralLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.ambient.rank:
            raise ValueError("coordinate length does not match ambient rank")

    @property
    def norm(self) -> int:
        return self.ambient.norm(self.coords)

    def pair(self, other) -> int:
        return self.ambient.pair(self.coords, other)

    def __add__(self, other):
        return LatticeVector(self.ambient,
                             tuple(a + b for a, b in zip(self.coords, _coords(other))))

    def __sub__(self, other):
        return LatticeVector(self.ambient,
                             tuple(a - b for a, b in zip(self.coords, _coords(other))))

    def __rmul__(self, k: int):
        return LatticeVector(self.ambient, tuple(k * a for a in self.coords))

    def __neg__(self):
        return LatticeVector(self.ambient, tuple(-a for a in self.coords))


class Sublattice(NamedTuple):
    """A sublattice presented abstractly plus its embedding into the ambient.

    ``basis`` lists the ambient coordinates of the abstract basis vectors
    (one integer vector per abstract basis element).
    """
    lattice: IntegralLattice
    basis: list[list[int]]

    def to_ambient(self, v) -> tuple[int, ...]:
        vc = _coords(v)
        n = len(self.basis[0]) if self.basis else 0
        return tuple(sum(vc[a] * self.basis[a][i] for a in range(len(self.basis)))
                     for i in range(n))


def signature_of_gram(gram) -> Signature:
    """Exact signature via symmetric congruence diagonalization over Q."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((k for k in range(i + 1, n) if a[k][k] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((k for k in range(i + 1, n) if a[i][k] != 0), None)
                if j is None:
                    raise DegenerateLattice("degenerate block in signature computation")
                # a[j][j] = 0 too, so adding row+column j doubles the cross term
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
        p = a[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            f = a[j][i] / p
            if f:
                for k in range(n):
                    a[j][k] -= f * a[i][k]
                for k in range(n):
                    a[k][j] -= f * a[k][i]
    return Signature(pos, neg)


def basic_invariants(L: IntegralLattice) -> Invariants:
    return Invariants(L.det, L.signature, L.parity)


def smith_normal_form(a):
    """Smith normal form with transforms: returns (D, U, V) with U A V = D."""
    return exact.smith_normal_form(a)


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite group A_L = L*/L presented by invariant factors.

    ``lifts[i]`` is the canonical generator of the i-th cyclic factor: a dual
    vector written in rational lattice-basis coordinates, normalized into
    [0, 1) componentwise.
    """
    lattice: IntegralLattice
    factors: tuple[int, ...]
    lifts: tuple[tuple[Fraction, ...], ...]
    _u: tuple[tuple[int, ...], ...]
    _positions: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.factors)

    def elements(self, guard: int = ENUMERATION_GUARD) -> Iterator[tuple[int, ...]]:
        if self.order > guard:
            raise TooLarge(f"discriminant group has {self.order} elements (guard {guard})")
        return itertools.product(*(range(d) for d in self.factors))

    def lift(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        n = self.lattice.rank
        acc = [Fraction(0)] * n
        for c, g in zip(coeffs, self.lifts):
            for i in range(n):
                acc[i] += c * g[i]
        return tuple(x - x.__floor__() for x in acc)

    def order_of(self, coeffs: Sequence[int]) -> int:
        o = 1
        for c, d in zip(coeffs, self.factors):
            dd = d // gcd(c % d, d) if c % d else 1
            o = o * dd // gcd(o, dd)
        return o

    def class_of_dual_coords(self, z: Sequence[int]) -> tuple[int, ...]:
        """Class of a dual vector given by its integer dual-basis coordinates."""
        w = exact.mat_vec([list(r) for r in self._u], list(z))
        return tuple(w[p] % d for p, d in zip(self._positions, self.factors))

    def class_of_rational(self, y: Sequence[Fraction]) -> tuple[int, ...]:
        """Class of a dual vector given in rational lattice-basis coordinates."""
        g = self.lattice.gram
        n = self.lattice.rank
        z = []
        for i in range(n):
            v = sum(Fraction(y[j]) * g[i][j] for j in range(n))
            if v.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            z.append(int(v))
        return self.class_of_dual_coords(z)


def discriminant_group(L: IntegralLattice) -> DiscriminantGroup:
    d, u, v = exact.smith_normal_form([list(r) for r in L.gram])
    n = L.rank
    factors = []
    positions = []
    lifts = []
    for i in range(n):
        di = d[i][i]
        if di > 1:
            factors.append(di)
            positions.append(i)
            col = [Fraction(v[k][i], di) for k in range(n)]
            lifts.append(tuple(x - x.__floor__() for x in col))
    return DiscriminantGroup(
        lattice=L,
        factors=tuple(factors),
        lifts=tuple(lifts),
        _u=tuple(tuple(row) for row in u),
        _positions=tuple(positions),
    )


class _FormBase:
    """Shared machinery: exact pairings of generator lifts, scaled to ints."""

    def __init__(self, group: DiscriminantGroup):
        self.group = group
        L = group.lattice
        k = len(group.factors)
        pair = [[L.pair_rational(group.lifts[i], group.lifts[j]) for j in range(k)]
                for i in range(k)]
        scale = exact.lcm_list([p.denominator for row in pair for p in row] or [1])
        self._scale = scale
        self._pair_scaled = [[int(p * scale) for p in row] for row in pair]

    def bilinear(self, c1: Sequence[int], c2: Sequence[int]) -> Fraction:
        """b(x, y) in Q/Z, reduced into [0, 1)."""
        p = self._pair_scaled
        total = 0
        for i, a in enumerate(c1):
            if a:
                row = p[i]
                for j, b in enumerate(c2):
                    if b:
                        total += a * b * row[j]
        return Fraction(total % self._scale, self._scale)

    def bilinear_matrix(self) -> list[list[Fraction]]:
        k = len(self.group.factors)
        eye = [[int(i == j) for j in range(k)] for i in range(k)]
        return [[self.bilinear(eye[i], eye[j]) for j in range(k)] for i in range(k)]


class FiniteBilinearForm(_FormBase):
    """The discriminant bilinear form b_L: A_L x A_L -> Q/Z."""


class FiniteQuadraticForm(_FormBase):
    """The discriminant quadratic form q_L: A_L -> Q/2Z of an even lattice."""

    def q(self, coeffs: Sequence[int]) -> Fraction:
        p = self._pair_scaled
        total = 0
        for i, a in enumerate(coeffs):
            if a:
                total += a * a * p[i][i]
                for j in range(i + 1, len(coeffs)):
                    b = coeffs[j]
                    if b:
                        total += 2 * a * b * p[i][j]
        return Fraction(total % (2 * self._scale), self._scale)

    def value_multiset(self, guard: int = ENUMERATION_GUARD) -> tuple[Fraction, ...]:
        return tuple(sorted(self.q(e) for e in self.group.elements(guard)))


def discriminant_form(L: IntegralLattice) -> FiniteQuadraticForm:
    if not L.is_even:
        bad = next(i for i in range(L.rank) if L.gram[i][i] % 2)
        raise ParityError(
            f"quadratic discriminant form needs an even lattice; "
            f"diagonal entry for basis vector {L.labels[bad]!r} is odd")
    return FiniteQuadraticForm(discriminant_group(L))


def discriminant_bilinear_form(L: IntegralLattice) -> FiniteBilinearForm:
    return FiniteBilinearForm(discriminant_group(L))


def divisibility(L: IntegralLattice, v) -> int:
    vc = _coords(v)
    if all(x == 0 for x in vc):
        raise ZeroVector("divisibility of the zero vector is undefined")
    return exact.gcd_list(L.dual_pairings(vc))


def rescale(L: IntegralLattice, r) -> IntegralLattice:
    r = Fraction(r)
    new = []
    for i, row in enumerate(L.gram):
        out = []
        for j, x in enumerate(row):
            v = r * x
            if v.denominator != 1:
                raise NotIntegral(f"entry ({i},{j}) scales to non-integer {v}")
            out.append(int(v))
        new.append(out)
    name = f"{L.name}({r})" if L.name else None
    return IntegralLattice(new, labels=L.labels, name=name)


def direct_sum(*lattices: IntegralLattice) -> IntegralLattice:
    if not lattices:
        raise ValueError("direct_sum needs at least one summand")
    total = sum(L.rank for L in lattices)
    gram = [[0] * total for _ in range(total)]
    labels: list[str] = []
    offset = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                gram[offset + i][offset + j] = L.gram[i][j]
        for lab in L.labels:
            new = lab
            while new in labels:
                new += "'"
            labels.append(new)
        offset += L.rank
    names = [L.name for L in lattices]
    name = " + ".join(names) if all(names) else None
    return IntegralLattice(gram, labels=labels, name=name)


def orthogonal_complement(L: IntegralLattice, vectors) -> Sublattice:
    vs = [list(_coords(v)) for v in vectors]
    if vs and exact.rational_rank(vs) < len(vs):
        raise DependentSpan("spanning vectors are linearly dependent")
    constraints = [list(L.dual_pairings(v)) for v in vs]
    if not constraints:
        cols = exact.identity(L.rank)
        basis = [exact.column(cols, j) for j in range(L.rank)]
    else:
        basis = exact.integer_kernel(constraints)
    gram = [[L.pair(a, b) for b in basis] for a in basis]
    sub = IntegralLattice(gram, labels=[f"c{i+1}" for i in range(len(basis))])
    return Sublattice(sub, basis)


def saturation(L: IntegralLattice, vectors) -> Sublattice:
    vs = [list(_coords(v)) for v in vectors]
    if not vs:
        raise DependentSpan("saturation of the empty span is undefined")
    if exact.rational_rank(vs) < len(vs):
        raise DependentSpan("spanning vectors are linearly dependent")
    # functionals vanishing on the span, then their joint kernel: the
    # intersection of the rational span with the lattice
    funcs = exact.integer_kernel(vs)
    if not funcs:
        basis = [exact.column(exact.identity(L.rank), j) for j in range(L.rank)]
    else:
        basis = exact.integer_kernel([list(f) for f in funcs])
    gram = [[L.pair(a, b) for b in basis] for a in basis]
    sub = IntegralLattice(gram, labels=[f"s{i+1}" for i in range(len(basis))])
    return Sublattice(sub, basis)


def lattice_to_json(L: IntegralLattice) -> str:
    payload = {
        "name": L.name or "",
        "labels": list(L.labels),
        "gram": [list(row) for row in L.gram],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def lattice_from_json(text: str) -> IntegralLattice:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("top-level JSON value must be an object")
    for key in ("labels", "gram"):
        if key not in data:
            raise ValueError(f"missing required key {key!r}")
    gram = data["gram"]
    if (not isinstance(gram, list)
            or any(not isinstance(row, list) for row in gram)
            or any(not isinstance(x, int) or isinstance(x, bool)
                   for row in gram for x in row)):
        raise ValueError("gram must be a matrix of integers")
    return IntegralLattice(gram, labels=data["labels"], name=data.get("name") or None)
