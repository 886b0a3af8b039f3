"""Indices of singular points on smooth ambient space.

Three families of indices live here, all read off finite dimensional
quotient algebras:

* the colength index of a holomorphic vector field (the local index at an
  algebraically isolated zero equals the dimension of the local algebra);
* the signature index of a real analytic vector field or 1-form: the
  residue pairing on the local algebra is realized by a linear functional
  that is positive on the Jacobian class, and the local degree is the
  signature of the resulting symmetric form;
* the colength index of a collection of sections of a trivial bundle,
  computed from the ideal of maximal minors of the section matrices.

Finite linear group actions on the variables act on the quotient algebra;
the dimension of the invariant subspace and the signature of the pairing
restricted to it are the equivariant quantities exposed here.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalCheckError, NotIsolatedError, RejectedInputError
from .grobner import (
    DEFAULT_DEGREE_CAP,
    INFINITE,
    Ideal,
    colength,
    quotient_algebra,
)
from .linalg import RationalMatrix, rref, symmetric_signature
from .poly import GLOBAL_ORDER, Polynomial, minors, jacobian_det, monomial_degree, parse_polynomial


class VectorFieldGerm:
    """Vector field germ at the origin: one component per variable."""

    def __init__(self, variables, components, field="C"):
        self.variables = tuple(variables)
        self.components = tuple(
            parse_polynomial(c, self.variables) for c in components
        )
        if len(self.components) != len(self.variables):
            raise RejectedInputError(
                "component count must equal the variable count"
            )
        if field not in ("R", "C"):
            raise RejectedInputError("ground field tag must be 'R' or 'C'")
        self.field = field

    def ideal(self):
        return Ideal(self.components, "local")


class OneFormGerm:
    """1-form germ at the origin: one coefficient polynomial per variable."""

    def __init__(self, variables, coefficients, field="C"):
        self.variables = tuple(variables)
        self.coefficients = tuple(
            parse_polynomial(c, self.variables) for c in coefficients
        )
        if len(self.coefficients) != len(self.variables):
            raise RejectedInputError(
                "coefficient count must equal the variable count"
            )
        if field not in ("R", "C"):
            raise RejectedInputError("ground field tag must be 'R' or 'C'")
        self.field = field

    def ideal(self):
        return Ideal(self.coefficients, "local")


class SectionCollection:
    """Collection of polynomial sections of a trivial rank-m bundle.

    The i-th group carries m - k_i + 1 sections, stored as the columns of
    an m x (m - k_i + 1) matrix; the partition (k_1, ..., k_s) must sum
    to the number of variables.
    """

    def __init__(self, variables, rank, partition, matrices):
        self.variables = tuple(variables)
        self.rank = int(rank)
        self.partition = tuple(int(k) for k in partition)
        n = len(self.variables)
        if sum(self.partition) != n:
            raise RejectedInputError(
                f"partition {self.partition} must sum to the variable count {n}"
            )
        if any(k < 1 for k in self.partition):
            raise RejectedInputError("partition entries must be positive")
        if len(matrices) != len(self.partition):
            raise RejectedInputError("need one section matrix per partition entry")
        parsed = []
        for k, mat in zip(self.partition, matrices):
            want_cols = self.rank - k + 1
            if want_cols < 1:
                raise RejectedInputError(
                    f"partition entry {k} exceeds the bundle rank {self.rank}"
                )
            rows = [
                [parse_polynomial(e, self.variables) for e in row] for row in mat
            ]
            if len(rows) != self.rank or any(len(r) != want_cols for r in rows):
                raise RejectedInputError(
                    f"group matrix must be {self.rank} x {want_cols}"
                )
            parsed.append(rows)
        self.matrices = parsed

    def minors_ideal(self):
        gens = []
        for k, mat in zip(self.partition, self.matrices):
            size = self.rank - k + 1
            gens.extend(minors(mat, size))
        nonzero = [g for g in gens if not g.is_zero]
        if not nonzero:
            nonzero = [Polynomial.zero(self.variables)]
        return Ideal(nonzero, "local")


# ---------------------------------------------------------------------------
# colength indices


def palamodov_index(vf, degree_cap=DEFAULT_DEGREE_CAP):
    """Index of a holomorphic vector field at the origin: the colength of
    the ideal of its components in the local ring.  INFINITE means the
    singular point is not algebraically isolated; 0 means the field does
    not vanish at the origin at all."""
    return colength(vf.ideal(), degree_cap)


def complex_form_index(form, degree_cap=DEFAULT_DEGREE_CAP):
    """Index of a holomorphic 1-form: the colength of its coefficient
    ideal.  By the orientation convention for complex 1-forms this equals
    (-1)^n times the index of the real part of the form on R^{2n}.
    A value of 0 means the form has no zero at the origin (the
    NONSINGULAR situation), INFINITE that the zero is not isolated."""
    return colength(form.ideal(), degree_cap)


def collection_index(coll, degree_cap=DEFAULT_DEGREE_CAP):
    """Index of a section collection: colength of the ideal generated by
    the maximal minors of every group matrix."""
    return colength(coll.minors_ideal(), degree_cap)


# ---------------------------------------------------------------------------
# the signature index of a real germ


class ELKForm:
    """The residue-pairing data of a real germ with algebraically isolated
    zero: the local algebra, the class of the Jacobian determinant, a
    linear functional positive on that class, and the Gram matrix of the
    induced symmetric bilinear form."""

    def __init__(self, algebra, jacobian_coords, functional, gram):
        self.algebra = algebra
        self.jacobian_coords = tuple(jacobian_coords)
        self.functional = tuple(functional)
        self.gram = gram

    def signature(self):
        pos, neg, zero = symmetric_signature(self.gram)
        if zero != 0:
            raise InternalCheckError(
                "residue pairing degenerated; input is inconsistent"
            )
        return pos - neg


def _apply_functional(functional, coords):
    return sum((f * c for f, c in zip(functional, coords)), Fraction(0))


def _choose_functional(algebra, jac_coords):
    """Deterministic functional: extract the coefficient of the largest
    basis monomial appearing in the Jacobian class, scaled so the
    Jacobian class maps to dim Q (the residue normalization)."""
    candidates = [i for i, c in enumerate(jac_coords) if c != 0]
    if not candidates:
        raise RejectedInputError(
            "Jacobian class vanishes in the local algebra; "
            "inconsistent input for a finite map germ"
        )
    star = max(
        candidates,
        key=lambda i: (monomial_degree(algebra.basis[i]), GLOBAL_ORDER.key(algebra.basis[i])),
    )
    functional = [Fraction(0)] * algebra.dimension
    functional[star] = Fraction(algebra.dimension) / jac_coords[star]
    return functional


def _gram_matrix(algebra, functional):
    n = algebra.dimension
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(_apply_functional(functional, algebra.basis_product_coords(i, j)))
        rows.append(row)
    return RationalMatrix(rows)


def elk_form(vf, degree_cap=DEFAULT_DEGREE_CAP, functional=None):
    """Build the residue-pairing form of a real vector field germ.

    The functional may be overridden by any linear functional with a
    positive value on the Jacobian class; the signature does not depend
    on the choice.
    """
    if vf.field != "R":
        raise RejectedInputError("the signature index needs the real ground field tag")
    try:
        algebra = quotient_algebra(vf.ideal(), degree_cap)
    except NotIsolatedError:
        raise NotIsolatedError(
            "complexified zero set is positive dimensional: "
            "the germ is not algebraically isolated"
        )
    jac = jacobian_det(list(vf.components))
    jac_coords = algebra.coords(jac)
    if functional is None:
        functional = _choose_functional(algebra, jac_coords)
    else:
        functional = [Fraction(f) for f in functional]
        if _apply_functional(functional, jac_coords) <= 0:
            raise RejectedInputError(
                "functional must be positive on the Jacobian class"
            )
    gram = _gram_matrix(algebra, functional)
    return ELKForm(algebra, jac_coords, functional, gram)


def elk_index(vf, degree_cap=DEFAULT_DEGREE_CAP, functional=None):
    """Local degree of a real analytic germ with algebraically isolated
    zero: the signature of the residue pairing."""
    if isinstance(vf, ELKForm):
        return vf.signature()
    return elk_form(vf, degree_cap, functional).signature()


# ---------------------------------------------------------------------------
# finite linear group actions


class GroupAction:
    """A finite group of exact rational matrices acting on the variables.

    The closure of the generators is enumerated explicitly, with a cap
    guarding against non-finite input; every element therefore has finite
    order by construction.
    """

    def __init__(self, variables, generators, cap=512):
        self.variables = tuple(variables)
        n = len(self.variables)
        mats = []
        for g in generators:
            m = RationalMatrix(g)
            if m.rows != n or m.cols != n:
                raise RejectedInputError(
                    f"action matrices must be {n} x {n} for this context"
                )
            mats.append(m)
        identity = RationalMatrix.identity(n)
        elements = {identity.entries: identity}
        frontier = [identity]
        while frontier:
            current = frontier.pop()
            for g in mats:
                nxt = g.mul(current)
                if nxt.entries not in elements:
                    if len(elements) >= cap:
                        raise RejectedInputError(
                            f"group closure exceeded the cap of {cap} elements; "
                            "the action is not (verifiably) finite"
                        )
                    elements[nxt.entries] = nxt
                    frontier.append(nxt)
        self.elements = list(elements.values())
        self.generators = mats

    @property
    def order(self):
        return len(self.elements)

    def substitution(self, matrix):
        """Variable images of x -> M x as polynomials."""
        images = {}
        for i, name in enumerate(self.variables):
            p = Polynomial.zero(self.variables)
            for j, other in enumerate(self.variables):
                c = matrix.entries[i][j]
                if c != 0:
                    p = p + Polynomial.variable(self.variables, other) * c
            images[name] = p
        return images

    def transform(self, poly, matrix):
        return poly.substitute(self.substitution(matrix))


def ideal_is_invariant(algebra_or_ideal, action, degree_cap=DEFAULT_DEGREE_CAP):
    """Check invariance of the ideal by normal-forming the transformed
    generators; enough to check the generators of the group."""
    if hasattr(algebra_or_ideal, "standard_basis"):
        sb = algebra_or_ideal.standard_basis
        gens = algebra_or_ideal.ideal.generators
    else:
        from .grobner import standard_basis as _sb

        sb = _sb(algebra_or_ideal, degree_cap=degree_cap)
        gens = algebra_or_ideal.generators
    for g in action.generators:
        for f in gens:
            if not sb.contains(action.transform(f, g), degree_cap):
                return False
    return True


def _action_matrices(algebra, action):
    """Matrix of the substitution by each group element on the algebra, in
    the monomial basis (columns are images of basis monomials)."""
    out = []
    ctx = algebra.context
    for g in action.elements:
        images = action.substitution(g)
        cols = []
        for b in algebra.basis:
            mono = Polynomial(ctx, {b: Fraction(1)})
            cols.append(algebra.coords(mono.substitute(images)))
        out.append([[cols[j][i] for j in range(algebra.dimension)] for i in range(algebra.dimension)])
    return out


def _averaging_projector(mats, order):
    n = len(mats[0])
    avg = [[Fraction(0)] * n for _ in range(n)]
    for m in mats:
        for i in range(n):
            for j in range(n):
                avg[i][j] += m[i][j]
    inv = Fraction(1, order)
    return [[x * inv for x in row] for row in avg]


def invariant_dimension(algebra, action, degree_cap=DEFAULT_DEGREE_CAP):
    """Dimension of the subspace of the quotient algebra fixed by the
    action: 1/|G| times the sum of the traces of the group elements."""
    if not ideal_is_invariant(algebra, action, degree_cap):
        raise RejectedInputError("ideal is not invariant under the action")
    mats = _action_matrices(algebra, action)
    total = sum(sum(m[i][i] for i in range(len(m))) for m in mats)
    value = Fraction(total, action.order)
    if value.denominator != 1:
        raise InternalCheckError("trace average failed to be an integer")
    return int(value)


def invariant_signature(form, action, degree_cap=DEFAULT_DEGREE_CAP):
    """Signature of the residue pairing restricted to the invariant part
    of the algebra.

    The stored functional is averaged over the group first, making the
    bilinear form invariant, which keeps the trivial isotypic component
    orthogonal to the rest; the restriction is then nondegenerate and its
    signature does not depend on the admissible functional chosen.
    """
    algebra = form.algebra
    if not ideal_is_invariant(algebra, action, degree_cap):
        raise RejectedInputError("ideal is not invariant under the action")
    mats = _action_matrices(algebra, action)
    n = algebra.dimension
    averaged = [Fraction(0)] * n
    for m in mats:
        for j in range(n):
            averaged[j] += sum(form.functional[i] * m[i][j] for i in range(n))
    averaged = [a / action.order for a in averaged]
    if _apply_functional(averaged, form.jacobian_coords) <= 0:
        raise RejectedInputError(
            "averaged functional is not positive on the Jacobian class; "
            "the form data is not compatible with the action"
        )
    gram = _gram_matrix(algebra, averaged)
    projector = _averaging_projector(mats, action.order)
    # basis of the invariant subspace: independent columns of the projector
    transposed = [[projector[i][j] for i in range(n)] for j in range(n)]
    reduced, pivots = rref(transposed)
    basis_vectors = [[projector[i][p] for i in range(n)] for p in pivots]
    if not basis_vectors:
        return 0
    g = gram.entries
    restricted = [
        [
            sum(
                u[i] * g[i][j] * v[j]
                for i in range(n)
                for j in range(n)
                if u[i] != 0 and g[i][j] != 0
            )
            for v in basis_vectors
        ]
        for u in basis_vectors
    ]
    pos, neg, zero = symmetric_signature(restricted)
    if zero != 0:
        raise InternalCheckError("restricted pairing degenerated unexpectedly")
    return pos - neg


# ---------------------------------------------------------------------------
# realification helper


def realify(variables, components):
    """Turn a holomorphic square system into the underlying real system.

    Each complex variable z splits into two real ones (z_re, z_im) and
    each component f into (Re f, Im f), expanded exactly over the
    Gaussian rationals.  The returned component order interleaves real
    and imaginary parts, which matches the complex orientation, so the
    local degree of the real system equals the complex colength.
    """
    variables = tuple(variables)
    components = [parse_polynomial(c, variables) for c in components]
    real_vars = []
    for v in variables:
        real_vars.extend((f"{v}_re", f"{v}_im"))
    # substitute z = x + i y with i a reserved auxiliary variable, then
    # fold i^2 -> -1 and split by parity of the power of i
    aux = tuple(real_vars) + ("_i",)
    images = {}
    for v in variables:
        images[v] = (
            Polynomial.variable(aux, f"{v}_re")
            + Polynomial.variable(aux, f"{v}_im") * Polynomial.variable(aux, "_i")
        )
    out = []
    for f in components:
        expanded = f.substitute(images)
        re_terms = {}
        im_terms = {}
        for mono, coeff in expanded.terms.items():
            base, ipow = mono[:-1], mono[-1]
            sign = -1 if (ipow // 2) % 2 else 1
            target = re_terms if ipow % 2 == 0 else im_terms
            target[base] = target.get(base, Fraction(0)) + sign * coeff
        out.append(Polynomial(tuple(real_vars), re_terms))
        out.append(Polynomial(tuple(real_vars), im_terms))
    return tuple(real_vars), out
