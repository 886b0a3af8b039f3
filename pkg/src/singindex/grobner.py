"""Global Groebner bases, local standard bases, colengths, quotient algebras.

Global ideals go through Buchberger's algorithm with the normal selection
strategy (minimal lcm degree first, deterministic tie-break), giving a
reduced basis with a strong normal form.

Local ideals (the ring of germs at the origin) use the negative-degree
reverse-lexicographic order and Mora's ecart-controlled weak normal form.
The weak normal form decides membership (it returns zero exactly on
elements of the localized ideal) but only determines classes up to a unit
factor, so the quotient-algebra machinery computes exact class
representatives by linear algebra modulo ``I + m^T`` where T exceeds the
top staircase degree; since the local order refines the degree
filtration, ``m^T`` is then contained in the localized ideal and the
truncation is faithful.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DegreeCapError,
    InternalCheckError,
    NotIsolatedError,
    RejectedInputError,
)
from .poly import (
    GLOBAL_ORDER,
    LOCAL_ORDER,
    MonomialOrder,
    Polynomial,
    monomial_degree,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    monomials_up_to_degree,
    parse_polynomial,
)

DEFAULT_DEGREE_CAP = 40


class _Infinite:
    """Distinguished colength value for non-zero-dimensional ideals.

    It is a value, not an error: callers use it to report that a
    singular point is not isolated."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __bool__(self):
        return True


INFINITE = _Infinite()


class Ideal:
    """A finitely generated ideal with a locality tag.

    locality 'local' means the ideal lives in the local ring at the
    origin (germs); 'global' means the polynomial ring itself.
    """

    __slots__ = ("generators", "context", "locality")

    def __init__(self, generators, locality="local"):
        gens = list(generators)
        if not gens:
            raise RejectedInputError("ideal needs at least one generator")
        ctx = gens[0].context
        for g in gens:
            if g.context != ctx:
                raise RejectedInputError("ideal generators must share one context")
        if locality in ("local-at-origin", "local"):
            locality = "local"
        elif locality != "global":
            raise RejectedInputError(f"unknown locality {locality!r}")
        seen = []
        for g in gens:
            if not g.is_zero and g not in seen:
                seen.append(g)
        if not seen:
            seen = [Polynomial.zero(ctx)]
        object.__setattr__(self, "generators", tuple(seen))
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "locality", locality)

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def from_strings(cls, texts, variables, locality="local"):
        return cls([parse_polynomial(t, variables) for t in texts], locality)

    def default_order(self):
        return LOCAL_ORDER if self.locality == "local" else GLOBAL_ORDER

    def translate(self, point):
        """The same ideal with the origin moved to `point`."""
        return Ideal([g.translate(point) for g in self.generators], self.locality)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]!r}, locality={self.locality!r})"


# ---------------------------------------------------------------------------
# normal forms


def _ecart(poly, lt_mono):
    return poly.degree() - monomial_degree(lt_mono)


def _check_cap(poly, cap):
    if poly.degree() > cap:
        raise DegreeCapError(
            f"intermediate degree {poly.degree()} exceeded the cap {cap}"
        )


def _truncate(poly, bound):
    """Drop all terms of total degree above the bound (reduction modulo
    the corresponding power of the maximal ideal)."""
    if poly.degree() <= bound:
        return poly
    return Polynomial(
        poly.context,
        {m: c for m, c in poly.terms.items() if monomial_degree(m) <= bound},
    )


def _normal_form_global(p, basis, order, cap, tail=True):
    """Strong normal form: no remaining monomial (or only the leading one
    when tail=False) is divisible by a basis leading term."""
    ctx = p.context
    remainder = {}
    work = p
    while not work.is_zero:
        _check_cap(work, cap)
        m, c = work.leading_term(order)
        hit = next((b for b in basis if monomial_divides(b[0], m)), None)
        if hit is None:
            remainder[m] = c
            work = work - Polynomial(ctx, {m: c})
            if not tail:
                return work + Polynomial(ctx, remainder)
        else:
            lt, lc, g = hit
            work = work - g.term_mul(monomial_quotient(m, lt), c / lc)
    return Polynomial(ctx, remainder)


def _normal_form_mora(p, basis, order, cap, truncation=None):
    """Mora's weak normal form with ecart control.

    Returns h with leading monomial not divisible by any basis leading
    term; h is u*p reduced for some unit u of the local ring, so h == 0
    exactly when p lies in the localized ideal.  With a truncation bound,
    arithmetic happens modulo the corresponding power of the maximal
    ideal, which bounds every intermediate degree.
    """
    h = p if truncation is None else _truncate(p, truncation)
    pool = [(lt, lc, g, _ecart(g, lt)) for (lt, lc, g) in basis]
    while not h.is_zero:
        if truncation is None:
            _check_cap(h, cap)
        lm, lc = h.leading_term(order)
        divisors = [entry for entry in pool if monomial_divides(entry[0], lm)]
        if not divisors:
            return h
        best = min(divisors, key=lambda e: e[3])
        h_ecart = _ecart(h, lm)
        if best[3] > h_ecart:
            pool.append((lm, lc, h, h_ecart))
        h = h - best[2].term_mul(monomial_quotient(lm, best[0]), lc / best[1])
        if truncation is not None:
            h = _truncate(h, truncation)
    return h


# ---------------------------------------------------------------------------
# basis completion


def _spoly(f_lt, f, g_lt, g, order):
    lcm = monomial_lcm(f_lt, g_lt)
    a = f.term_mul(monomial_quotient(lcm, f_lt), Fraction(1))
    b = g.term_mul(monomial_quotient(lcm, g_lt), Fraction(1))
    return a - b


class StandardBasis:
    """Computed basis (reduced for global orders, minimal for local ones);
    leading coefficients are normalized to 1."""

    __slots__ = ("elements", "order", "locality", "ideal", "_lead")

    def __init__(self, elements, order, locality, ideal):
        object.__setattr__(self, "elements", tuple(elements))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "locality", locality)
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(
            self,
            "_lead",
            tuple((g.leading_term(order)[0], g.leading_term(order)[1], g) for g in elements),
        )

    def __setattr__(self, *a):
        raise AttributeError("StandardBasis is immutable")

    def leading_monomials(self):
        return [lt for lt, _, _ in self._lead]

    def normal_form(self, p, degree_cap=DEFAULT_DEGREE_CAP):
        """Strong normal form for global bases, Mora weak normal form for
        local ones.  Either way, the result is zero exactly when p is a
        member of the ideal (localized, in the local case)."""
        if p.context != self.ideal.context:
            raise RejectedInputError("context mismatch in normal form")
        if self.locality == "global":
            return _normal_form_global(p, self._lead, self.order, degree_cap)
        return _normal_form_mora(p, self._lead, self.order, degree_cap)

    def contains(self, p, degree_cap=DEFAULT_DEGREE_CAP):
        return self.normal_form(p, degree_cap).is_zero


def _completion(generators, order, degree_cap, truncation=None):
    """Pair-completion loop shared by Buchberger and Mora.

    S-pairs are processed by minimal lcm total degree with a
    deterministic tie-break on generator indices so reruns are
    byte-for-byte reproducible.  Returns the minimalized monic basis.
    """
    basis = []
    for g in generators:
        if truncation is not None:
            g = _truncate(g, truncation)
        if g.is_zero:
            continue
        g = g.monic(order)
        if g not in basis:
            basis.append(g)
    lead = [(g.leading_term(order)[0], Fraction(1), g) for g in basis]

    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def pair_key(pair):
        i, j = pair
        lcm = monomial_lcm(lead[i][0], lead[j][0])
        return (monomial_degree(lcm), j, i)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lt_i, lt_j = lead[i][0], lead[j][0]
        if not order.is_local:
            # product criterion (valid for global orders)
            if monomial_lcm(lt_i, lt_j) == monomial_mul(lt_i, lt_j):
                continue
        s = _spoly(lt_i, basis[i], lt_j, basis[j], order)
        if order.is_local:
            h = _normal_form_mora(s, lead, order, degree_cap, truncation)
        else:
            h = _normal_form_global(s, lead, order, degree_cap)
        if h.is_zero:
            continue
        h = h.monic(order)
        basis.append(h)
        lead.append((h.leading_term(order)[0], Fraction(1), h))
        k = len(basis) - 1
        pairs.update((k, t) for t in range(k))

    # minimalize: drop elements whose leading term is divisible by another's
    keep = []
    for idx in range(len(lead)):
        lt = lead[idx][0]
        redundant = any(
            other != idx
            and monomial_divides(lead[other][0], lt)
            and (lead[other][0] != lt or other < idx)
            for other in range(len(lead))
        )
        if not redundant:
            keep.append(idx)
    return [basis[i] for i in keep]


def _staircase_count_below(lead_monomials, nvars, bound):
    """Number of monomials of degree <= bound outside the given leading
    terms; equals dim of the quotient by (ideal + m^(bound+1))."""
    count = 0
    for mono in monomials_up_to_degree(nvars, bound + 1):
        if not any(monomial_divides(lt, mono) for lt in lead_monomials):
            count += 1
    return count


def _deepened_local_basis(ideal, order, degree_cap):
    """Local standard basis via Mora completion truncated modulo rising
    powers of the maximal ideal.

    Truncation at bound B computes a standard basis of I + m^(B+1); the
    staircase count below B is the dimension of that quotient.  Two
    consecutive equal counts force (Nakayama) m^B into the localized
    ideal, so the truncated basis, extended by the degree-B boundary
    monomials outside its leading terms, is a genuine standard basis of
    the germ ideal.  No stabilization below the degree cap means the run
    is abandoned; this path never guesses INFINITE.
    """
    ctx = ideal.context
    nvars = len(ctx)
    previous = None
    for bound in range(1, degree_cap + 1):
        elements = _completion(ideal.generators, order, degree_cap, truncation=bound)
        if not elements:
            previous = None
            continue
        if any(e.min_degree() == 0 for e in elements):
            # a unit appeared: the ideal is the whole local ring
            return elements
        lead = [e.leading_term(order)[0] for e in elements]
        count = _staircase_count_below(lead, nvars, bound)
        if previous is not None and count == previous:
            boundary = [
                Polynomial(ctx, {mono: Fraction(1)})
                for mono in _monomials_of_exact_degree(nvars, bound)
                if not any(monomial_divides(lt, mono) for lt in lead)
            ]
            return elements + boundary
        previous = count
    raise DegreeCapError(
        f"local basis did not stabilize below the degree cap {degree_cap}"
    )


def _monomials_of_exact_degree(nvars, degree):
    return [
        m for m in monomials_up_to_degree(nvars, degree + 1) if monomial_degree(m) == degree
    ]


def standard_basis(ideal, order=None, degree_cap=DEFAULT_DEGREE_CAP):
    """Compute a standard basis of the ideal.

    Global ideals run Buchberger's algorithm with full tail reduction
    (the reduced basis).  Local ideals run Mora's algorithm; when the
    plain run overshoots its degree budget, the computation restarts
    truncated modulo powers of the maximal ideal with iterative
    deepening, which returns exactly the same leading-term data for the
    germ whenever it stabilizes (and aborts with DEGREE_CAP otherwise).
    """
    if order is None:
        order = ideal.default_order()
    if order.is_local != (ideal.locality == "local"):
        raise RejectedInputError("order locality does not match ideal locality")

    if order.is_local:
        max_degree = max(g.degree() for g in ideal.generators)
        soft_cap = min(degree_cap, max(12, 2 * max_degree + 4))
        try:
            minimal = _completion(ideal.generators, order, soft_cap)
        except DegreeCapError:
            minimal = _deepened_local_basis(ideal, order, degree_cap)
    else:
        minimal = _completion(ideal.generators, order, degree_cap)
        # tail-reduce for the reduced Groebner basis
        lead = [(g.leading_term(order)[0], Fraction(1), g) for g in minimal]
        reduced = []
        for pos, g in enumerate(minimal):
            others = [lead[q] for q in range(len(minimal)) if q != pos]
            reduced.append(_normal_form_global(g, others, order, degree_cap).monic(order))
        minimal = reduced

    minimal = sorted(minimal, key=lambda g: order.key(g.leading_term(order)[0]))
    return StandardBasis(minimal, order, ideal.locality, ideal)


# ---------------------------------------------------------------------------
# staircases and colength


def is_zero_dimensional(sb):
    """True when the leading terms contain a pure power of every variable,
    i.e. the staircase is finite."""
    n = len(sb.ideal.context)
    return all(_pure_power_bound(sb, i) is not None for i in range(n))


def _pure_power_bound(sb, var):
    best = None
    for lt in sb.leading_monomials():
        if all(e == 0 for k, e in enumerate(lt) if k != var):
            if best is None or lt[var] < best:
                best = lt[var]
    return best


def staircase_monomials(sb):
    """Monomials outside the leading-term ideal, or INFINITE."""
    n = len(sb.ideal.context)
    bounds = [_pure_power_bound(sb, i) for i in range(n)]
    if any(b is None for b in bounds):
        return INFINITE
    lead = sb.leading_monomials()
    out = []

    def walk(prefix, i):
        if i == n:
            mono = tuple(prefix)
            if not any(monomial_divides(lt, mono) for lt in lead):
                out.append(mono)
            return
        for e in range(bounds[i]):
            walk(prefix + [e], i + 1)

    walk([], 0)
    out.sort(key=GLOBAL_ORDER.key)
    return out


def colength(ideal_or_basis, degree_cap=DEFAULT_DEGREE_CAP):
    """dim of the quotient by the ideal, as a rational vector space,
    counted as the number of standard monomials; INFINITE when the ideal
    is not zero-dimensional."""
    sb = (
        ideal_or_basis
        if isinstance(ideal_or_basis, StandardBasis)
        else standard_basis(ideal_or_basis, degree_cap=degree_cap)
    )
    stairs = staircase_monomials(sb)
    if stairs is INFINITE:
        return INFINITE
    return len(stairs)


def localized_colength(ideal, point, degree_cap=DEFAULT_DEGREE_CAP):
    """Colength of the ideal in the local ring at `point`."""
    moved = Ideal(
        [g.translate(point) for g in ideal.generators], "local"
    )
    return colength(moved, degree_cap)


# ---------------------------------------------------------------------------
# quotient algebras


class _TruncatedReducer:
    """Exact class computation modulo I + m^T for a local ideal.

    Columns are the monomials of degree < T sorted descending in the
    global order; rows are truncations of monomial multiples of the
    generators, kept in echelon form.  Reduction of a polynomial first
    drops its degree >= T part (contained in the localized ideal) and
    then eliminates pivots, landing in the span of the non-pivot
    monomials.
    """

    def __init__(self, generators, context, truncation):
        self.context = context
        self.truncation = truncation
        cols = monomials_up_to_degree(len(context), truncation)
        cols.sort(key=GLOBAL_ORDER.key, reverse=True)
        self.cols = cols
        self.col_index = {m: i for i, m in enumerate(cols)}
        self.pivots = {}  # col position -> reduced row (list of Fractions)
        for g in generators:
            mind = g.min_degree()
            if mind < 0:
                continue
            if mind == 0:
                raise InternalCheckError("unit generator reached the truncated reducer")
            for m in monomials_up_to_degree(len(context), truncation - mind):
                self._insert(self._vector(g.term_mul(m, Fraction(1))))
        self.free_cols = [i for i in range(len(cols)) if i not in self.pivots]

    def _vector(self, poly):
        v = [Fraction(0)] * len(self.cols)
        for mono, c in poly.terms.items():
            if monomial_degree(mono) < self.truncation:
                v[self.col_index[mono]] = c
        return v

    def _eliminate(self, v):
        for pos in range(len(v)):
            if v[pos] != 0 and pos in self.pivots:
                f = v[pos]
                row = self.pivots[pos]
                for k in range(pos, len(v)):
                    if row[k] != 0:
                        v[k] -= f * row[k]
        return v

    def _insert(self, v):
        v = self._eliminate(v)
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            return
        inv = Fraction(1) / v[lead]
        v = [x * inv for x in v]
        for pos, row in self.pivots.items():
            if row[lead] != 0:
                f = row[lead]
                self.pivots[pos] = [a - f * b for a, b in zip(row, v)]
        self.pivots[lead] = v

    def reduce_coords(self, poly):
        """Coordinates of the class of poly over the free columns."""
        v = self._eliminate(self._vector(poly))
        return [v[i] for i in self.free_cols]

    def free_monomials(self):
        return [self.cols[i] for i in self.free_cols]


class QuotientAlgebra:
    """Finite dimensional algebra O/I with a monomial basis.

    basis monomials are the standard monomials of the computed standard
    basis, sorted ascending; the class of 1 is the unit.  Multiplication
    is looked up from a table of reduced basis products, so it is exact,
    commutative, and associative by construction of the reduction.
    """

    def __init__(self, ideal, sb, basis, coords_fn):
        self.ideal = ideal
        self.standard_basis = sb
        self.context = ideal.context
        self.basis = tuple(basis)
        self.dimension = len(basis)
        self._coords_fn = coords_fn
        self._index = {m: i for i, m in enumerate(self.basis)}
        self._table = {}
        unit = (0,) * len(self.context)
        if unit not in self._index:
            raise InternalCheckError("unit monomial missing from quotient basis")
        self.unit_index = self._index[unit]

    def coords(self, poly):
        """Coordinates of the class of poly in the monomial basis."""
        if poly.context != self.context:
            raise RejectedInputError("context mismatch in quotient reduction")
        return self._coords_fn(poly)

    def reduce(self, poly):
        """Canonical representative supported on the basis monomials."""
        cs = self.coords(poly)
        return Polynomial(self.context, dict(zip(self.basis, cs)))

    def basis_product_coords(self, i, j):
        if i > j:
            i, j = j, i
        key = (i, j)
        if key not in self._table:
            prod = Polynomial(self.context, {monomial_mul(self.basis[i], self.basis[j]): Fraction(1)})
            self._table[key] = tuple(self.coords(prod))
        return self._table[key]

    def multiply_coords(self, u, v):
        """Product of two classes given by coordinate vectors."""
        out = [Fraction(0)] * self.dimension
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, c in enumerate(self.basis_product_coords(i, j)):
                    if c != 0:
                        out[k] += a * b * c
        return out


def quotient_algebra(ideal, degree_cap=DEFAULT_DEGREE_CAP):
    """Quotient algebra with basis and exact multiplication.

    Raises NotIsolatedError when the colength is infinite.  The local
    case certifies itself: the staircase count from the standard basis
    must agree with the dimension of the truncated model.
    """
    sb = standard_basis(ideal, degree_cap=degree_cap)
    stairs = staircase_monomials(sb)
    if stairs is INFINITE:
        raise NotIsolatedError(
            "ideal is not zero-dimensional: singular point not isolated"
        )
    basis = sorted(stairs, key=GLOBAL_ORDER.key)
    dim = len(basis)
    if dim == 0:
        raise NotIsolatedError("unit ideal: there is no singular point at the origin")

    if ideal.locality == "global":
        lead = sb._lead

        def coords(poly, _lead=lead, _order=sb.order, _cap=degree_cap, _basis=basis):
            nf = _normal_form_global(poly, _lead, _order, _cap)
            return [nf.terms.get(m, Fraction(0)) for m in _basis]

        return QuotientAlgebra(ideal, sb, basis, coords)

    truncation = max(monomial_degree(m) for m in basis) + 1
    reducer = _TruncatedReducer(ideal.generators, ideal.context, truncation)
    free = reducer.free_monomials()
    if len(free) != dim:
        raise InternalCheckError(
            f"staircase count {dim} disagrees with truncated model {len(free)}"
        )
    # change of basis from the staircase monomials to the free columns
    from .linalg import invert

    columns = []
    for b in basis:
        columns.append(
            reducer.reduce_coords(Polynomial(ideal.context, {b: Fraction(1)}))
        )
    matrix = [[columns[j][i] for j in range(dim)] for i in range(dim)]
    try:
        inverse = invert(matrix)
    except RejectedInputError:
        raise InternalCheckError("staircase monomials failed to span the quotient")

    def coords(poly, _red=reducer, _inv=inverse, _dim=dim):
        v = _red.reduce_coords(poly)
        return [
            sum((_inv[i][k] * v[k] for k in range(_dim)), Fraction(0))
            for i in range(_dim)
        ]

    return QuotientAlgebra(ideal, sb, basis, coords)
