"""Towers of inseparable quadratic extensions of GF(2)(t1..tm) and their 2-bases.

A field is presented as a chain  K0 = GF(2)(t1..tm) c K1 c ... c Kd  where
K{r} = K{r-1}(sqrt(theta_r)).  Every level keeps a 2-basis of size m (the
transcendence degree; inseparable quadratic extensions preserve [K:K^2]):
level 0 uses the variables themselves, and adjoining sqrt(theta) swaps one
basis member for the new root.  The replacement rule is fixed (lowest index
among members occurring to an odd power in theta's expansion) so equal
presentations are bit-identical.

Elements are stored at their minimal level: a level-r element is a pair
u + v*sqrt(theta_r) with v nonzero, bottoming out in a RationalFunction.
The central operation is `expand`, writing y = sum_S c_S^2 * prod_{b in S} b
over the top 2-basis; it is additive and Frobenius-semilinear
(expand(l^2 * y) = l * expand(y)), which turns K^2-linear algebra into
K-linear algebra on coordinate vectors and drives every rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ArityMismatch,
    CapExceeded,
    DivisionByZero,
    DuplicateVar,
    FieldMismatch,
    InternalInconsistency,
    ParseError,
    ThetaIsSquare,
)
from .gf2poly import (
    MAX_VARS,
    Polynomial2,
    RationalFunction,
    parse_rational,
    rational_to_str,
)


@dataclass(frozen=True)
class Caps:
    """Size guards for tower computations; exceeding one raises CapExceeded."""

    trdeg_cap: int = 8
    level_cap: int = 8


DEFAULT_CAPS = Caps()


class FieldElement:
    """Element of a tower level: a RationalFunction at level 0, else u + v*root."""

    __slots__ = ("level", "payload")

    def __init__(self, level, payload):
        self.level = level
        self.payload = payload

    @property
    def is_zero(self):
        return self.level == 0 and self.payload.is_zero

    @property
    def is_one(self):
        return self.level == 0 and self.payload.is_one

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.level == other.level
            and self.payload == other.payload
        )

    def __hash__(self):
        return hash((self.level, self.payload))

    def __repr__(self):
        return f"<elem level={self.level}>"


def element0(rf: RationalFunction) -> FieldElement:
    return FieldElement(0, rf)


def make_element(level: int, u: FieldElement, v: FieldElement) -> FieldElement:
    """u + v*sqrt(theta_level), lowered to u when v = 0."""
    if v.is_zero:
        return u
    if u.level >= level or v.level >= level:
        raise InternalInconsistency("payload levels must decrease")
    return FieldElement(level, (u, v))


class AdjunctionLevel:
    __slots__ = ("theta", "replaced_index")

    def __init__(self, theta: FieldElement, replaced_index: int):
        self.theta = theta
        self.replaced_index = replaced_index

    def __eq__(self, other):
        return (
            isinstance(other, AdjunctionLevel)
            and self.theta == other.theta
            and self.replaced_index == other.replaced_index
        )

    def __hash__(self):
        return hash((self.theta, self.replaced_index))


class SquareCoordinates:
    """Coordinates over a 2-basis: y = sum_S entries[S]^2 * prod_{i in S} basis[i].

    Keys are bitmasks over basis indices; absent masks are zero entries.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: dict):
        self.entries = entries

    def __eq__(self, other):
        return isinstance(other, SquareCoordinates) and self.entries == other.entries

    def __repr__(self):
        return f"SquareCoordinates({sorted(self.entries)})"


class FieldTower:
    """Immutable field presentation; all element arithmetic goes through it.

    Per-level caches (2-bases, basis monomials, theta split data, rank memo)
    are lazily built and write-once, so sharing a tower between tasks is safe.
    """

    def __init__(self, base_vars, levels, caps=DEFAULT_CAPS):
        base_vars = tuple(base_vars)
        seen = set()
        for name in base_vars:
            if name in seen:
                raise DuplicateVar(f"duplicate variable {name!r}")
            seen.add(name)
        if len(base_vars) > caps.trdeg_cap:
            raise CapExceeded(
                f"transcendence degree {len(base_vars)} exceeds cap {caps.trdeg_cap}"
            )
        if len(base_vars) > MAX_VARS:
            raise CapExceeded(f"arity cap {MAX_VARS} exceeded")
        levels = tuple(levels)
        if len(levels) > caps.level_cap:
            raise CapExceeded(f"level count {len(levels)} exceeds cap {caps.level_cap}")
        self.base_vars = base_vars
        self.levels = levels
        self.caps = caps
        self._arity = len(base_vars)
        self._zero = element0(RationalFunction.zero(self._arity))
        self._one = element0(RationalFunction.one(self._arity))
        self._basis_cache = {}
        self._monomial_cache = {}
        self._theta_cache = {}
        self._rank_memo = {}
        self._expand_memo = {}

    # -- identity -----------------------------------------------------------

    @property
    def trdeg(self):
        return self._arity

    @property
    def depth(self):
        return len(self.levels)

    def _key(self):
        return (self.base_vars, self.levels)

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldTower(base={self.base_vars}, depth={self.depth})"

    # -- element constructors -------------------------------------------------

    def zero(self) -> FieldElement:
        return self._zero

    def one(self) -> FieldElement:
        return self._one

    def var(self, index: int) -> FieldElement:
        return element0(
            RationalFunction.from_poly(Polynomial2.variable(index, self._arity))
        )

    def gen(self, name: str) -> FieldElement:
        return self.var(self.base_vars.index(name))

    def root(self, level: int) -> FieldElement:
        """sqrt(theta_level) as an element, 1 <= level <= depth."""
        if not 1 <= level <= self.depth:
            raise IndexError(f"no adjoined root at level {level}")
        return FieldElement(level, (self._zero, self._one))

    def from_rational(self, rf: RationalFunction) -> FieldElement:
        if rf.arity != self._arity:
            raise ArityMismatch(f"arity {rf.arity} vs {self._arity}")
        return element0(rf)

    def parse(self, text: str) -> FieldElement:
        return element0(parse_rational(text, self.base_vars))

    # -- arithmetic -----------------------------------------------------------

    def _check_element(self, x):
        if x.level > self.depth:
            raise FieldMismatch("element level exceeds tower depth")
        return x

    def _split(self, x, level):
        if x.level == level:
            return x.payload
        return (x, self._zero)

    def add(self, x, y):
        if x.level == 0 and y.level == 0:
            return element0(x.payload + y.payload)
        level = max(x.level, y.level)
        xu, xv = self._split(x, level)
        yu, yv = self._split(y, level)
        return make_element(level, self.add(xu, yu), self.add(xv, yv))

    sub = add

    def mul(self, x, y):
        if x.level == 0 and y.level == 0:
            return element0(x.payload * y.payload)
        if x.is_one:
            return y
        if y.is_one:
            return x
        level = max(x.level, y.level)
        xu, xv = self._split(x, level)
        yu, yv = self._split(y, level)
        theta = self.levels[level - 1].theta
        u = self.add(self.mul(xu, yu), self.mul(theta, self.mul(xv, yv)))
        v = self.add(self.mul(xu, yv), self.mul(xv, yu))
        return make_element(level, u, v)

    def square(self, x):
        # (u + v*root)^2 = u^2 + theta*v^2: squares drop one level.
        if x.level == 0:
            return element0(x.payload.square())
        u, v = x.payload
        theta = self.levels[x.level - 1].theta
        return self.add(self.square(u), self.mul(theta, self.square(v)))

    def inv(self, x):
        if x.is_zero:
            raise DivisionByZero("inverse of zero")
        if x.level == 0:
            return element0(x.payload.inverse())
        # 1/x = x / x^2 with x^2 at a lower level.
        return self._div_lower(x, self.square(x))

    def _div_lower(self, x, d):
        """x / d where d.level < x.level."""
        if x.level == 0:
            return element0(x.payload / d.payload)
        if x.level <= d.level:
            return self.mul(x, self.inv(d))
        u, v = x.payload
        return make_element(x.level, self._div_lower(u, d), self._div_lower(v, d))

    def div(self, x, y):
        if y.is_zero:
            raise DivisionByZero("division by zero")
        if y.level < x.level:
            return self._div_lower(x, y)
        return self.mul(x, self.inv(y))

    def sum_of(self, elems):
        acc = self._zero
        for e in elems:
            acc = self.add(acc, e)
        return acc

    # -- 2-basis machinery ------------------------------------------------------

    def basis(self, level=None) -> list:
        """The maintained 2-basis at `level` (default: top)."""
        if level is None:
            level = self.depth
        cached = self._basis_cache.get(level)
        if cached is not None:
            return cached
        if level == 0:
            b = [self.var(i) for i in range(self._arity)]
        else:
            b = list(self.basis(level - 1))
            b[self.levels[level - 1].replaced_index] = self.root(level)
        self._basis_cache[level] = b
        return b

    def _monomials(self, level):
        cached = self._monomial_cache.get(level)
        if cached is not None:
            return cached
        basis = self.basis(level)
        table = [self._one] * (1 << self._arity)
        for mask in range(1, 1 << self._arity):
            low = mask & -mask
            table[mask] = self.mul(table[mask ^ low], basis[low.bit_length() - 1])
        self._monomial_cache[level] = table
        return table

    def monomial(self, mask: int, level=None) -> FieldElement:
        if level is None:
            level = self.depth
        return self._monomials(level)[mask]

    def reconstruct(self, coords, level=None) -> FieldElement:
        """Inverse of expand: sum of entry^2 * basis monomial."""
        if level is None:
            level = self.depth
        entries = coords.entries if isinstance(coords, SquareCoordinates) else coords
        table = self._monomials(level)
        acc = self._zero
        for mask, c in entries.items():
            acc = self.add(acc, self.mul(self.square(c), table[mask]))
        return acc

    def _theta_split(self, level):
        """theta_level = g0 + g1 * b_j over the level-(level-1) basis; caches g1^-1."""
        cached = self._theta_cache.get(level)
        if cached is not None:
            return cached
        lv = self.levels[level - 1]
        theta = lv.theta
        j = lv.replaced_index
        coords = self._expand(theta, level - 1)
        bit = 1 << j
        table = self._monomials(level - 1)
        g1 = self._zero
        for mask, c in coords.items():
            if mask & bit:
                g1 = self.add(g1, self.mul(self.square(c), table[mask ^ bit]))
        if g1.is_zero:
            raise InternalInconsistency("replaced member absent from theta expansion")
        b_j = self.basis(level - 1)[j]
        g0 = self.add(theta, self.mul(b_j, g1))
        data = (g0, g1, self.inv(g1), b_j)
        self._theta_cache[level] = data
        return data

    def expand(self, x: FieldElement) -> SquareCoordinates:
        """Coordinates of x over the top-level 2-basis; exact, total on K."""
        self._check_element(x)
        return SquareCoordinates(dict(self._expand_top(x)))

    def _expand_top(self, x):
        cached = self._expand_memo.get(x)
        if cached is None:
            cached = self._expand(x, self.depth)
            self._expand_memo[x] = cached
        return cached

    def _expand(self, x, level):
        if level == 0:
            rf = x.payload
            if rf.is_zero:
                return {}
            # num/den = (num*den)/den^2, and den divides into each coordinate.
            buckets = (rf.num * rf.den).parity_decompose()
            return {
                mask: element0(RationalFunction(g, rf.den))
                for mask, g in buckets.items()
            }
        u, v = self._split(x, level)
        bit = 1 << self.levels[level - 1].replaced_index
        out = {}
        for part, flag in ((u, 0), (v, bit)):
            if part.is_zero:
                continue
            modified = self._expand_modified(part, level)
            for mask in modified:
                if mask & bit:
                    continue
                c = make_element(
                    level, modified[mask], modified.get(mask | bit, self._zero)
                )
                if not c.is_zero:
                    out[mask | flag] = c
            for mask in modified:
                if (mask & bit) and (mask ^ bit) not in modified:
                    c = make_element(level, self._zero, modified[mask])
                    out[(mask ^ bit) | flag] = c
        return out

    def _expand_modified(self, u, level):
        """Coordinates of u over the level-(level-1) basis with theta_level
        substituted for the replaced member (bit j then means theta)."""
        coords = self._expand(u, level - 1)
        bit = 1 << self.levels[level - 1].replaced_index
        if not any(mask & bit for mask in coords):
            return coords
        g0, g1, g1_inv, b_j = self._theta_split(level)
        table = self._monomials(level - 1)
        e1 = self._zero
        for mask, c in coords.items():
            if mask & bit:
                e1 = self.add(e1, self.mul(self.square(c), table[mask ^ bit]))
        e0 = self.add(u, self.mul(b_j, e1))
        f1 = self.mul(e1, g1_inv)
        f0 = self.add(e0, self.mul(f1, g0))
        out = {}
        for mask, c in self._expand(f0, level - 1).items():
            if mask & bit:
                raise InternalInconsistency("even part not free of replaced member")
            out[mask] = c
        for mask, c in self._expand(f1, level - 1).items():
            if mask & bit:
                raise InternalInconsistency("odd part not free of replaced member")
            out[mask | bit] = c
        return out

    def sqrt_element(self, x: FieldElement):
        """Square root of x within the tower, or None when x is not a square."""
        if x.level == 0 and self.depth == 0:
            rt = x.payload.sqrt_if_square()
            return None if rt is None else element0(rt)
        coords = self._expand_top(x)
        nontrivial = [mask for mask in coords if mask]
        if nontrivial:
            return None
        return coords.get(0, self._zero)

    # -- tower construction -------------------------------------------------------

    def adjoin_sqrt(self, theta: FieldElement) -> "FieldTower":
        """K(sqrt(theta)); raises ThetaIsSquare when theta is a square (or zero)."""
        self._check_element(theta)
        if theta.is_zero:
            raise ThetaIsSquare("theta is zero")
        coords = self._expand_top(theta)
        odd_masks = [mask for mask in coords if mask]
        if not odd_masks:
            raise ThetaIsSquare("theta is a square in the tower")
        participating = 0
        for mask in odd_masks:
            participating |= mask
        j = (participating & -participating).bit_length() - 1
        return FieldTower(
            self.base_vars, self.levels + (AdjunctionLevel(theta, j),), self.caps
        )

    def extend_base(self, new_vars) -> "FieldTower":
        """Append fresh transcendentals; adjoined levels re-embed unchanged.

        The replacement indices carry over: new variables never occur in the
        old thetas, so the lowest-index rule picks the same member.
        """
        new_vars = tuple(new_vars)
        for name in new_vars:
            if name in self.base_vars:
                raise DuplicateVar(f"variable {name!r} already in base")
        arity = self._arity + len(new_vars)
        levels = []
        for lv in self.levels:
            levels.append(
                AdjunctionLevel(_embed(lv.theta, arity), lv.replaced_index)
            )
        return FieldTower(self.base_vars + new_vars, levels, self.caps)

    def is_extension_of(self, other: "FieldTower") -> bool:
        if other.base_vars != self.base_vars[: len(other.base_vars)]:
            return False
        if other.depth > self.depth:
            return False
        for mine, theirs in zip(self.levels, other.levels):
            if mine.replaced_index != theirs.replaced_index:
                return False
            if mine.theta != _embed(theirs.theta, self._arity):
                return False
        return True

    def embed(self, x: FieldElement) -> FieldElement:
        """Reinterpret an element of a subtower in this tower."""
        return _embed(self._check_element(x), self._arity)

    # -- semilinear rank ------------------------------------------------------------

    def rank_over_squares(self, elems) -> tuple:
        """Rank of the K^2-span of elems and kernel witnesses.

        Each witness is a tuple (l_1..l_n) over K, not all zero, with
        sum l_i^2 * elem_i = 0; one witness per nullity dimension.
        """
        data = self._echelon(tuple(elems))
        return data.rank, data.witnesses

    def _echelon(self, elems: tuple) -> "EchelonData":
        cached = self._rank_memo.get(elems)
        if cached is not None:
            return cached
        if _RANK_CACHE is not None:
            cached = _RANK_CACHE.get(self, elems)
            if cached is not None:
                self._rank_memo[elems] = cached
                return cached
        cols = [dict(self._expand_top(e)) for e in elems]
        data = self._echelon_coords(cols)
        self._rank_memo[elems] = data
        if _RANK_CACHE is not None:
            _RANK_CACHE.put(self, elems, data)
        return data

    def _echelon_coords(self, cols) -> "EchelonData":
        """Column echelon with combination tracking.

        Pivot rule: columns in given order, first nonzero row (masks ascending).
        """
        n = len(cols)
        pivots = []  # (row, reduced column dict, combo dict col_index -> coeff)
        pivot_indices = []
        witnesses = []
        for j, col in enumerate(cols):
            col = dict(col)
            combo = {j: self._one}
            for row, pcol, pcombo in pivots:
                c = col.get(row)
                if c is None or c.is_zero:
                    continue
                _add_scaled(self, col, pcol, c)
                _add_scaled(self, combo, pcombo, c)
            if not col:
                witnesses.append(
                    tuple(combo.get(i, self._zero) for i in range(n))
                )
                continue
            row = min(col)
            scale = self.inv(col[row])
            col = {m: self.mul(scale, c) for m, c in col.items()}
            combo = {i: self.mul(scale, c) for i, c in combo.items()}
            pivots.append((row, col, combo))
            pivot_indices.append(j)
        data = EchelonData(
            rank=len(pivots),
            pivot_indices=tuple(pivot_indices),
            witnesses=tuple(witnesses),
            pivots=tuple(pivots),
        )
        return data


def _add_scaled(K, target: dict, source: dict, scale):
    for key, val in source.items():
        cur = target.get(key)
        nxt = K.mul(scale, val) if cur is None else K.add(cur, K.mul(scale, val))
        if nxt.is_zero:
            target.pop(key, None)
        else:
            target[key] = nxt


class EchelonData:
    __slots__ = ("rank", "pivot_indices", "witnesses", "pivots")

    def __init__(self, rank, pivot_indices, witnesses, pivots):
        self.rank = rank
        self.pivot_indices = pivot_indices
        self.witnesses = witnesses
        self.pivots = pivots


def _embed(x: FieldElement, arity: int) -> FieldElement:
    if x.level == 0:
        rf = x.payload
        if rf.arity == arity:
            return x
        return element0(rf.with_arity(arity))
    u, v = x.payload
    return FieldElement(x.level, (_embed(u, arity), _embed(v, arity)))


def make_base_field(names, caps=DEFAULT_CAPS) -> FieldTower:
    """GF(2)(names...); the 2-basis is the variables themselves."""
    for name in names:
        if not isinstance(name, str) or not name or not name[0].isalpha():
            raise ParseError(f"invalid variable name {name!r}")
    return FieldTower(tuple(names), (), caps)


# -- square subspaces -----------------------------------------------------------


class SquareSubspace:
    """K^2-subspace of K in reduced coordinate echelon form (canonical)."""

    __slots__ = ("field", "generators", "reduced_basis")

    def __init__(self, field, generators, reduced_basis):
        self.field = field
        self.generators = generators
        self.reduced_basis = reduced_basis  # tuple of (pivot_row, coords dict)

    @property
    def dim(self):
        return len(self.reduced_basis)

    def __eq__(self, other):
        if not isinstance(other, SquareSubspace) or self.field != other.field:
            return False
        if len(self.reduced_basis) != len(other.reduced_basis):
            return False
        for (r1, c1), (r2, c2) in zip(self.reduced_basis, other.reduced_basis):
            if r1 != r2 or c1 != c2:
                return False
        return True

    def basis_elements(self) -> list:
        K = self.field
        return [K.reconstruct(coords) for _, coords in self.reduced_basis]

    def contains(self, y: FieldElement) -> bool:
        return self._reduce(dict(self.field.expand(y).entries)) == {}

    def _reduce(self, coords: dict) -> dict:
        K = self.field
        for row, basis_coords in self.reduced_basis:
            c = coords.get(row)
            if c is not None and not c.is_zero:
                _add_scaled(K, coords, basis_coords, c)
        return coords

    def representation(self, y: FieldElement):
        """Coefficients l_i with y = sum l_i^2 * basis_elements[i], or None."""
        K = self.field
        coords = dict(K.expand(y).entries)
        coeffs = []
        for row, basis_coords in self.reduced_basis:
            c = coords.get(row, K.zero())
            coeffs.append(c)
            if not c.is_zero:
                _add_scaled(K, coords, basis_coords, c)
        if coords:
            return None
        return tuple(coeffs)


def span(K: FieldTower, generators) -> SquareSubspace:
    """K^2-span of the generators, reduced to canonical echelon form."""
    generators = tuple(g for g in generators if not g.is_zero)
    cols = [dict(K._expand_top(g)) for g in generators]
    return _span_coords(K, generators, cols)


def _span_coords(K, generators, cols):
    data = K._echelon_coords(cols)
    basis = [(row, dict(col)) for row, col, _ in data.pivots]
    # Back-eliminate to the reduced form: unique for a given column space.
    for i in range(len(basis) - 1, -1, -1):
        row_i, col_i = basis[i]
        for k in range(i):
            row_k, col_k = basis[k]
            c = col_k.get(row_i)
            if c is not None and not c.is_zero:
                _add_scaled(K, col_k, col_i, c)
    basis.sort(key=lambda rc: rc[0])
    return SquareSubspace(K, generators, tuple((r, c) for r, c in basis))


def member(V: SquareSubspace, y: FieldElement) -> bool:
    return V.contains(y)


def intersect(V: SquareSubspace, W: SquareSubspace) -> SquareSubspace:
    """V of W via the kernel of the juxtaposed coordinate matrices."""
    if V.field != W.field:
        raise FieldMismatch("subspaces over different towers")
    K = V.field
    cols = [dict(c) for _, c in V.reduced_basis] + [
        dict(c) for _, c in W.reduced_basis
    ]
    data = K._echelon_coords(cols)
    nv = len(V.reduced_basis)
    members = []
    for wit in data.witnesses:
        coords = {}
        for i in range(nv):
            if not wit[i].is_zero:
                _add_scaled(K, coords, dict(V.reduced_basis[i][1]), wit[i])
        members.append(K.reconstruct(coords))
    return span(K, members)


def scale(a: FieldElement, V: SquareSubspace) -> SquareSubspace:
    if a.is_zero:
        raise DivisionByZero("scaling a subspace by zero")
    K = V.field
    return span(K, [K.mul(a, b) for b in V.basis_elements()])


def subspace_sum(V: SquareSubspace, W: SquareSubspace) -> SquareSubspace:
    if V.field != W.field:
        raise FieldMismatch("subspaces over different towers")
    return span(V.field, V.basis_elements() + W.basis_elements())


# -- element serialization --------------------------------------------------------


def elem_to_expr(x: FieldElement, names):
    """Nested {u, v} pairs bottoming out in rational-function text."""
    if x.level == 0:
        return rational_to_str(x.payload, names)
    u, v = x.payload
    return {"u": elem_to_expr(u, names), "v": elem_to_expr(v, names)}


def elem_from_expr(expr, K: FieldTower) -> FieldElement:
    if isinstance(expr, str):
        return K.parse(expr)
    if isinstance(expr, dict):
        if set(expr) != {"u", "v"}:
            raise ParseError(f"element object must have keys u, v; got {sorted(expr)}")
        u = elem_from_expr(expr["u"], K)
        v = elem_from_expr(expr["v"], K)
        level = max(u.level, v.level) + 1
        if level > K.depth:
            raise ParseError("element nesting deeper than tower")
        return make_element(level, u, v)
    raise ParseError(f"invalid element expression {type(expr).__name__}")


# -- optional content-addressed cache hook ----------------------------------------

_RANK_CACHE = None


def set_rank_cache(cache) -> None:
    """Install a process-wide rank-result cache (see qlform.cache), or None."""
    global _RANK_CACHE
    _RANK_CACHE = cache


def canonical_rank_key(K: FieldTower, elems) -> str:
    """Stable text key for (field, element list); used for content addressing."""
    names = K.base_vars
    parts = ["F[" + ",".join(names) + "]"]
    for lv in K.levels:
        parts.append(f"L{lv.replaced_index}:{_expr_text(lv.theta, names)}")
    for e in elems:
        parts.append(_expr_text(e, names))
    return "|".join(parts)


def _expr_text(x, names):
    expr = elem_to_expr(x, names)
    if isinstance(expr, str):
        return expr
    return "{u=" + _expr_text_obj(expr["u"]) + ",v=" + _expr_text_obj(expr["v"]) + "}"


def _expr_text_obj(expr):
    if isinstance(expr, str):
        return expr
    return "{u=" + _expr_text_obj(expr["u"]) + ",v=" + _expr_text_obj(expr["v"]) + "}"
