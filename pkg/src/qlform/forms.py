"""Quasilinear (diagonal) quadratic forms over a field tower and their invariants.

A form <a1,...,an> is its coefficient list.  Additivity in characteristic 2
makes the value set D(q) the K^2-span of the coefficients, so every invariant
here reduces to semilinear rank computations and subspace arithmetic from
qlform.towers: isotropy index, anisotropic kernel, similarity factors G(q),
norm field and norm degree, and divisibility by quasi-Pfister forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    AIsSquare,
    FieldMismatch,
    IndexOutOfRange,
    InternalInconsistency,
    NotAnExtension,
    RequiresAnisotropic,
    ZeroForm,
)
from .towers import (
    FieldElement,
    FieldTower,
    SquareSubspace,
    _add_scaled,
    intersect,
    scale,
    span,
)


@dataclass(frozen=True)
class QuasilinearForm:
    """Diagonal form over a tower; zero coefficients are legal."""

    field: FieldTower
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero_form(self) -> bool:
        """True when the form represents only zero (all coefficients zero)."""
        return all(c.is_zero for c in self.coeffs)

    def evaluate(self, vector) -> FieldElement:
        K = self.field
        acc = K.zero()
        for a, x in zip(self.coeffs, vector):
            acc = K.add(acc, K.mul(a, K.square(x)))
        return acc


def form(K: FieldTower, coeffs) -> QuasilinearForm:
    return QuasilinearForm(K, tuple(coeffs))


class QuasiPfister(NamedTuple):
    """<<a1,...,an>> = <1,a1> x ... x <1,an>, kept with its expansion."""

    slots: tuple
    expanded: QuasilinearForm

    @property
    def fold(self) -> int:
        return len(self.slots)


def quasi_pfister(K: FieldTower, slots) -> QuasiPfister:
    slots = tuple(slots)
    expanded = form(K, (K.one(),))
    for a in slots:
        expanded = tensor(expanded, form(K, (K.one(), a)))
    return QuasiPfister(slots, expanded)


def _check_same_field(p: QuasilinearForm, q: QuasilinearForm):
    if p.field != q.field:
        raise FieldMismatch("forms over different towers")


def _echelon(q: QuasilinearForm):
    return q.field._echelon(q.coeffs)


# -- basic invariants -------------------------------------------------------------


def isotropy_index(q: QuasilinearForm) -> int:
    """dim(q) minus the K^2-rank of the coefficients."""
    return q.dim - _echelon(q).rank


def anisotropic_part(q: QuasilinearForm) -> QuasilinearForm:
    """The subsequence of coefficients at the deterministic pivot positions."""
    data = _echelon(q)
    return form(q.field, (q.coeffs[i] for i in data.pivot_indices))


def d_set(q: QuasilinearForm) -> SquareSubspace:
    """D(q): the K^2-span of the coefficients (zero omitted)."""
    return span(q.field, q.coeffs)


def represents(q: QuasilinearForm, c: FieldElement) -> bool:
    if c.is_zero:
        return True
    return d_set(q).contains(c)


def subform_up_to_iso(p: QuasilinearForm, q: QuasilinearForm) -> bool:
    """p_an embeds in q_an iff D(p) is a subset of D(q)."""
    _check_same_field(p, q)
    Dq = d_set(q)
    return all(c.is_zero or Dq.contains(c) for c in p.coeffs)


# -- form algebra -----------------------------------------------------------------


def orth_sum(p: QuasilinearForm, q: QuasilinearForm) -> QuasilinearForm:
    _check_same_field(p, q)
    return form(p.field, p.coeffs + q.coeffs)


def tensor(p: QuasilinearForm, q: QuasilinearForm) -> QuasilinearForm:
    _check_same_field(p, q)
    K = p.field
    return form(K, (K.mul(a, b) for a in p.coeffs for b in q.coeffs))


def scale_form(a: FieldElement, q: QuasilinearForm) -> QuasilinearForm:
    K = q.field
    return form(K, (K.mul(a, c) for c in q.coeffs))


# -- similarity factors and quasi-Pfister divisibility ------------------------------


def similarity_field(q: QuasilinearForm) -> SquareSubspace:
    """G(q_an) = {a : a*D = D}, as a subspace; a subfield containing the squares.

    It suffices to intersect (1/b)*D over a basis b of D: a*b in D for every
    basis member forces a*D inside D by semilinearity, and D being a
    finite-dimensional anisotropic value set upgrades inclusion to equality.
    """
    qa = anisotropic_part(q)
    if qa.dim == 0:
        raise ZeroForm("similarity field of a zero form")
    K = q.field
    D = d_set(qa)
    result = None
    for b in D.basis_elements():
        scaled = scale(K.inv(b), D)
        result = scaled if result is None else intersect(result, scaled)
    if result.dim & (result.dim - 1):
        raise InternalInconsistency(f"G-dimension {result.dim} is not a power of 2")
    return result


def subfield_span(K: FieldTower, gens) -> SquareSubspace:
    """K^2(gens) as a subspace: the span of all subset products of gens."""
    current = span(K, [K.one()])
    for g in gens:
        doubled = current.basis_elements() + [
            K.mul(g, b) for b in current.basis_elements()
        ]
        current = span(K, doubled)
    return current


def _greedy_subfield_basis(K: FieldTower, candidates):
    """Greedy 2-independent generators; returns (gens, span of K^2(gens))."""
    gens = []
    current = span(K, [K.one()])
    for g in candidates:
        if current.contains(g):
            continue
        gens.append(g)
        doubled = current.basis_elements() + [
            K.mul(g, b) for b in current.basis_elements()
        ]
        current = span(K, doubled)
        if current.dim != 1 << len(gens):
            raise InternalInconsistency("subfield span dimension not doubling")
    return gens, current


class DivisibilityIndex(NamedTuple):
    index: int
    witness: QuasiPfister


def divisibility_index(q: QuasilinearForm) -> DivisibilityIndex:
    """Largest s with q_an divisible by an s-fold quasi-Pfister form.

    Divisibility by an anisotropic quasi-Pfister form pi is equivalent to
    D(pi) lying inside G(q_an); subfields of the similarity field with
    [N : K^2] = 2^s correspond exactly to s-fold anisotropic quasi-Pfister
    divisors, so the index is log2 dim G(q_an) and a 2-basis of G(q_an) is a
    witness divisor.
    """
    G = similarity_field(q)
    index = G.dim.bit_length() - 1
    gens, field_span = _greedy_subfield_basis(q.field, G.basis_elements())
    if len(gens) != index or field_span != G:
        raise InternalInconsistency("similarity field is not a subfield span")
    return DivisibilityIndex(index, quasi_pfister(q.field, gens))


def is_divisible_by(q: QuasilinearForm, pi: QuasiPfister) -> bool:
    """q divisible by pi iff D(pi) lies inside G(q)."""
    if isotropy_index(q) != 0:
        raise RequiresAnisotropic("divisibility test needs anisotropic q")
    if isotropy_index(pi.expanded) != 0:
        raise RequiresAnisotropic("divisibility test needs anisotropic pi")
    _check_same_field(q, pi.expanded)
    G = similarity_field(q)
    return all(G.contains(c) for c in pi.expanded.coeffs)


class NormForm(NamedTuple):
    pfister: QuasiPfister
    lndeg: int


def norm_form(q: QuasilinearForm) -> NormForm:
    """Smallest quasi-Pfister form whose value set holds all ratios of D(q).

    Generators are the coefficient ratios a_i/a_0; the greedy filter keeps a
    2-basis of the norm field.  The choice of a_0 is immaterial: ratios by a
    different representative generate the same subfield.
    """
    nonzero = [c for c in q.coeffs if not c.is_zero]
    if not nonzero:
        raise ZeroForm("norm form of a zero form")
    K = q.field
    a0_inv = K.inv(nonzero[0])
    ratios = [K.mul(a0_inv, c) for c in nonzero[1:]]
    gens, _ = _greedy_subfield_basis(K, ratios)
    return NormForm(quasi_pfister(K, gens), len(gens))


def check_normform_divisibility(q: QuasilinearForm, p: QuasilinearForm) -> bool:
    """q divisible by the norm form of p iff (q x p)_an is similar to q.

    Both routes are computed independently; disagreement raises, since it can
    only mean a defect in one of them.
    """
    _check_same_field(q, p)
    if isotropy_index(q) != 0 or isotropy_index(p) != 0:
        raise RequiresAnisotropic("norm-form divisibility needs anisotropic forms")
    if q.is_zero_form or p.is_zero_form:
        raise ZeroForm("norm-form divisibility of a zero form")
    by_gfield = is_divisible_by(q, norm_form(p).pfister)
    t = anisotropic_part(tensor(q, p))
    by_tensor = t.dim == q.dim and similar_subform_witness(q, t) is not None
    if by_gfield != by_tensor:
        raise InternalInconsistency(
            f"divisibility routes disagree: G-field {by_gfield}, tensor {by_tensor}"
        )
    return by_gfield


def similar_subform_witness(
    p: QuasilinearForm, q: QuasilinearForm
) -> Optional[FieldElement]:
    """A nonzero a with a*p embedded in q_an, or None when no such a exists.

    The valid multipliers form the K^2-subspace W = intersection over a basis
    b of D(p) of (1/b)*D(q); any nonzero member works, so the first reduced
    basis vector is returned.
    """
    _check_same_field(p, q)
    if p.is_zero_form or p.dim == 0:
        raise ZeroForm("similarity witness needs a nonzero form")
    if isotropy_index(p) != 0:
        raise RequiresAnisotropic("similarity witness needs anisotropic p")
    K = p.field
    Dq = d_set(q)
    if Dq.dim == 0:
        return None
    W = None
    for b in d_set(p).basis_elements():
        scaled = scale(K.inv(b), Dq)
        W = scaled if W is None else intersect(W, scaled)
        if W.dim == 0:
            return None
    witness = K.reconstruct(W.reduced_basis[0][1])
    if not subform_up_to_iso(scale_form(witness, p), q):
        raise InternalInconsistency("similarity witness fails the subform test")
    return witness


# -- scalar extension and quadratic descent ------------------------------------------


def extend_scalars(q: QuasilinearForm, K2: FieldTower) -> QuasilinearForm:
    """The same coefficients read in an extension tower."""
    if not K2.is_extension_of(q.field):
        raise NotAnExtension("target tower does not extend the form's field")
    return form(K2, (K2.embed(c) for c in q.coeffs))


def reduce_isotropy_subform(
    q: QuasilinearForm, K: FieldTower, i: int
) -> QuasilinearForm:
    """Subform q' of q with isotropy index over K exactly i lower.

    Dropping a coefficient that participates in a kernel witness (the first
    non-pivot position, whose witness it closes) keeps the rank and lowers the
    dimension by one; repeated i times this is one pass over the free columns.
    """
    ext = extend_scalars(q, K) if K != q.field else q
    data = _echelon(ext)
    i0 = q.dim - data.rank
    if not 0 <= i <= i0:
        raise IndexOutOfRange(f"i={i} outside [0, {i0}]")
    if i == 0:
        return q
    pivot_set = set(data.pivot_indices)
    free = [j for j in range(q.dim) if j not in pivot_set]
    dropped = set(free[:i])
    return form(q.field, (c for j, c in enumerate(q.coeffs) if j not in dropped))


def quadratic_ext_decomposition(q: QuasilinearForm, a: FieldElement):
    """Split q = r + a*<b1..bn> over K, with r anisotropic over K(sqrt(a)).

    n is the isotropy index of q over K(sqrt(a)); each dropped coefficient c
    decomposes as c = d0 + a*d1 with d0, d1 in D(r), and d1 is the returned
    companion.  The value sets of q and r + a<b> are checked equal before
    returning.
    """
    K = q.field
    if isotropy_index(q) != 0:
        raise RequiresAnisotropic("decomposition needs anisotropic q")
    if K.sqrt_element(a) is not None:
        raise AIsSquare("a is a square in the base tower")
    K2 = K.adjoin_sqrt(a)
    ext = extend_scalars(q, K2)
    data = K2._echelon(ext.coeffs)
    pivot_set = set(data.pivot_indices)
    r = form(K, (q.coeffs[i] for i in data.pivot_indices))
    sources = list(r.coeffs) + [K.mul(a, c) for c in r.coeffs]
    source_data = K._echelon_coords([dict(K._expand_top(s)) for s in sources])
    companions = []
    for idx in range(q.dim):
        if idx in pivot_set:
            continue
        rep = _represent_in(K, source_data, len(sources), q.coeffs[idx])
        if rep is None:
            raise InternalInconsistency("dropped coefficient not in D(r) + a*D(r)")
        d1 = K.zero()
        for lam, c in zip(rep[len(r.coeffs) :], r.coeffs):
            d1 = K.add(d1, K.mul(K.square(lam), c))
        companions.append(d1)
    rebuilt = orth_sum(r, scale_form(a, form(K, companions)))
    if d_set(rebuilt) != d_set(q):
        raise InternalInconsistency("decomposition does not preserve the value set")
    return r, tuple(companions)


def _represent_in(K, source_data, n, y):
    """Coefficients over the original source list expressing y, or None."""
    coords = dict(K._expand_top(y))
    combo = {}
    for row, pcol, pcombo in source_data.pivots:
        c = coords.get(row)
        if c is None or c.is_zero:
            continue
        _add_scaled(K, coords, pcol, c)
        _add_scaled(K, combo, pcombo, c)
    if coords:
        return None
    return tuple(combo.get(i, K.zero()) for i in range(n))
