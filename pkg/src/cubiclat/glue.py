"""Overlattice machinery: isotropic subgroups of discriminant forms and the
finite-index extensions they generate.

An even overlattice of L corresponds to an isotropic subgroup H of (A_L, q_L);
for odd ambients the same construction runs against the bilinear form b_L and
the resulting overlattice is judged downstream.  det(overlattice) * |H|^2 =
det(L) holds for every construction and is asserted here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .core import (
    ENUMERATION_GUARD,
    BadSplitting,
    DiscriminantGroup,
    FiniteBilinearForm,
    FiniteQuadraticForm,
    IntegralLattice,
    NotIsotropic,
    ParityError,
    Sublattice,
    discriminant_bilinear_form,
    discriminant_form,
    discriminant_group,
)

AnyForm = FiniteQuadraticForm | FiniteBilinearForm


def _closure(generators, factors, guard=ENUMERATION_GUARD) -> frozenset:
    """All elements of the subgroup generated by the given coefficient tuples."""
    zero = tuple(0 for _ in factors)
    elems = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                s = tuple((a + b) % d for a, b, d in zip(e, g, factors))
                if s not in elems:
                    elems.add(s)
                    nxt.append(s)
                    if len(elems) > guard:
                        raise BadSplitting("subgroup closure exceeded guard")
        frontier = nxt
    return frozenset(elems)


@dataclass(frozen=True)
class GlueSubgroup:
    """An isotropic subgroup of a discriminant form with chosen generator lifts.

    ``generators`` are coefficient tuples with respect to the canonical
    generators of the discriminant group; ``lifts`` are the corresponding dual
    vectors in rational lattice-basis coordinates.
    """
    ambient: AnyForm
    generators: tuple[tuple[int, ...], ...]
    elements: frozenset
    order: int
    lifts: tuple[tuple[Fraction, ...], ...]

    def validate(self) -> None:
        amb = self.ambient
        if isinstance(amb, FiniteQuadraticForm):
            for e in sorted(self.elements):
                if amb.q(e) != 0:
                    raise NotIsotropic(f"element {e} has q = {amb.q(e)}")
        else:
            elems = sorted(self.elements)
            for i, x in enumerate(elems):
                for y in elems[i:]:
                    if amb.bilinear(x, y) != 0:
                        raise NotIsotropic(
                            f"elements {x}, {y} pair to {amb.bilinear(x, y)}")


def glue_subgroup(ambient: AnyForm, lifts) -> GlueSubgroup:
    """Build (and validate) the glue subgroup generated by dual-vector lifts."""
    group = ambient.group
    gens = []
    canon_lifts = []
    for lift in lifts:
        y = tuple(Fraction(x) for x in lift)
        gens.append(group.class_of_rational(y))
        canon_lifts.append(tuple(t - t.__floor__() for t in y))
    elements = _closure(gens, group.factors)
    sub = GlueSubgroup(
        ambient=ambient,
        generators=tuple(gens),
        elements=elements,
        order=len(elements),
        lifts=tuple(canon_lifts),
    )
    sub.validate()
    return sub


def trivial_glue(ambient: AnyForm) -> GlueSubgroup:
    zero = tuple(0 for _ in ambient.group.factors)
    return GlueSubgroup(ambient=ambient, generators=(), elements=frozenset({zero}),
                        order=1, lifts=())


def isotropic_elements(form: AnyForm, guard: int = ENUMERATION_GUARD) -> list[tuple[int, ...]]:
    """All nonzero elements with q = 0 mod 2Z (quadratic) or b(x,x) = 0 mod Z."""
    group = form.group
    out = []
    for e in group.elements(guard):
        if all(c == 0 for c in e):
            continue
        if isinstance(form, FiniteQuadraticForm):
            if form.q(e) == 0:
                out.append(e)
        else:
            if form.bilinear(e, e) == 0:
                out.append(e)
    return out


@dataclass(frozen=True)
class Overlattice:
    """A finite-index extension of an ambient lattice.

    ``basis[i]`` holds the rational ambient-basis coordinates of the i-th
    basis vector of the extension; ``index`` is the extension index.
    """
    lattice: IntegralLattice
    ambient: IntegralLattice
    basis: tuple[tuple[Fraction, ...], ...]
    index: int

    def to_ambient(self, v) -> tuple[Fraction, ...]:
        n = self.ambient.rank
        return tuple(sum(Fraction(v[a]) * self.basis[a][i] for a in range(n))
                     for i in range(n))

    def from_ambient(self, w) -> tuple[int, ...]:
        """Coordinates in the extension basis of a rational ambient vector."""
        bt = [[self.basis[a][i] for a in range(len(self.basis))]
              for i in range(self.ambient.rank)]
        c = exact.solve_exact(bt, [Fraction(x) for x in w])
        if any(x.denominator != 1 for x in c):
            raise ValueError("vector does not lie in the overlattice")
        return tuple(int(x) for x in c)


def overlattice_from_glue(L: IntegralLattice, H: GlueSubgroup) -> Overlattice:
    """The extension of L generated by the lifts of H, re-based integrally."""
    H.validate()
    n = L.rank
    den = exact.lcm_list([f.denominator for lift in H.lifts for f in lift] or [1])
    cols: list[list[int]] = [[den * int(i == j) for i in range(n)] for j in range(n)]
    for lift in H.lifts:
        cols.append([int(den * f) for f in lift])
    stacked = [[col[i] for col in cols] for i in range(n)]
    hbasis = exact.hermite_column_basis(stacked)
    assert len(hbasis) == n
    basis = tuple(tuple(Fraction(x, den) for x in col) for col in hbasis)
    # den-scaled basis vectors are integral, so the Gram is an integer
    # product divided by den^2
    scaled = exact.mat_mul([list(col) for col in hbasis], L.gram)
    scaled = exact.mat_mul(scaled, exact.transpose([list(col) for col in hbasis]))
    gram = []
    for a in range(n):
        row = []
        for b in range(n):
            num, rem = divmod(scaled[a][b], den * den)
            if rem:
                raise NotIsotropic(
                    "glue lifts do not pair integrally: entry "
                    f"({a},{b}) = {Fraction(scaled[a][b], den * den)}")
            row.append(num)
        gram.append(row)
    out = IntegralLattice(gram, labels=[f"b{i+1}" for i in range(n)])
    if L.is_even and not out.is_even:
        raise NotIsotropic("even ambient glued by a non-isotropic class came out odd")
    assert L.det == out.det * H.order ** 2, (L.det, out.det, H.order)
    return Overlattice(lattice=out, ambient=L, basis=basis, index=H.order)


@dataclass(frozen=True)
class GlueDecomposition:
    """Invariant factors of L/(S1 + S2) with generator images in A_S1 x A_S2."""
    factors: tuple[int, ...]
    group1: DiscriminantGroup
    group2: DiscriminantGroup
    embeddings: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def _basis_of(s) -> list[list[int]]:
    if isinstance(s, Sublattice):
        return [list(v) for v in s.basis]
    return [list(int(x) for x in v) for v in s]


def glue_group(L: IntegralLattice, s1, s2) -> GlueDecomposition:
    """The quotient of L by an orthogonal pair of full-rank sublattices."""
    b1, b2 = _basis_of(s1), _basis_of(s2)
    for v in b1:
        for w in b2:
            if L.pair(v, w) != 0:
                raise BadSplitting(f"spans are not orthogonal: {v} . {w} != 0")
    combined = b1 + b2
    if len(combined) != L.rank or exact.rational_rank(combined) != L.rank:
        raise BadSplitting(
            f"spans have combined rank {exact.rational_rank(combined)}, "
            f"need {L.rank}")
    bmat = [[combined[j][i] for j in range(L.rank)] for i in range(L.rank)]
    d, u, _ = exact.smith_normal_form(bmat)
    uinv = exact.frac_inverse(u)
    lat1 = IntegralLattice([[L.pair(x, y) for y in b1] for x in b1]) if b1 else None
    lat2 = IntegralLattice([[L.pair(x, y) for y in b2] for x in b2]) if b2 else None
    g1 = discriminant_group(lat1) if lat1 else None
    g2 = discriminant_group(lat2) if lat2 else None
    binv = exact.frac_inverse(bmat)
    factors = []
    embeddings = []
    for i in range(L.rank):
        di = d[i][i]
        if di <= 1:
            continue
        factors.append(di)
        w = [uinv[k][i] for k in range(L.rank)]
        assert all(x.denominator == 1 for x in w)
        c = exact.mat_vec(binv, w)
        c1, c2 = c[:len(b1)], c[len(b1):]
        e1 = g1.class_of_rational(c1) if g1 else ()
        e2 = g2.class_of_rational(c2) if g2 else ()
        embeddings.append((e1, e2))
    return GlueDecomposition(factors=tuple(factors), group1=g1, group2=g2,
                             embeddings=tuple(embeddings))


def enumerate_even_overlattices(L: IntegralLattice, max_index: int,
                                guard: int = ENUMERATION_GUARD):
    """All isotropic subgroups of order <= max_index with their overlattices.

    Subgroups are listed up to equality (no automorphism quotient), smallest
    first, the trivial subgroup included.
    """
    if not L.is_even:
        raise ParityError("even overlattice enumeration needs an even lattice")
    form = discriminant_form(L)
    group = form.group
    iso = isotropic_elements(form, guard)
    found: dict[frozenset, tuple[tuple[int, ...], ...]] = {}
    zero = tuple(0 for _ in group.factors)
    frontier = [(frozenset({zero}), ())]
    found[frozenset({zero})] = ()
    while frontier:
        nxt = []
        for elems, gens in frontier:
            for g in iso:
                if g in elems:
                    continue
                new_gens = gens + (g,)
                new_elems = _closure(new_gens, group.factors)
                if len(new_elems) > max_index or new_elems in found:
                    continue
                if any(form.q(e) != 0 for e in new_elems):
                    continue
                found[new_elems] = new_gens
                nxt.append((new_elems, new_gens))
        frontier = nxt
    out = []
    for elems in sorted(found, key=lambda s: (len(s), sorted(s))):
        gens = found[elems]
        lifts = tuple(group.lift(g) for g in gens)
        sub = GlueSubgroup(ambient=form, generators=gens, elements=elems,
                           order=len(elems), lifts=lifts)
        out.append((sub, overlattice_from_glue(L, sub)))
    return out
