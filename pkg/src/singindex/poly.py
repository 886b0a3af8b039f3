"""Exact multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` throughout; nothing downstream ever
touches floating point, because every index this library computes is an
integer and rounding would corrupt it.  A monomial is a plain tuple of
non-negative exponents whose length equals the number of variables of the
owning context.

The text grammar accepted by :func:`parse_polynomial` is the wire format
used by every JSON job file: variables are identifiers, coefficients are
integers or ``a/b`` rationals, and the operators are ``+ - * ^`` (plus
parentheses), e.g. ``x^2 + 2/3*x*y - z``.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import RejectedInputError

# ---------------------------------------------------------------------------
# monomials


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a):
    return sum(a)


def monomials_up_to_degree(nvars, bound):
    """All exponent tuples of total degree < bound, nvars variables."""
    out = []
    for deg in range(bound):
        out.extend(_monomials_of_degree(nvars, deg))
    return out


def _monomials_of_degree(nvars, deg):
    if nvars == 1:
        return [(deg,)]
    out = []
    for first in range(deg + 1):
        for rest in _monomials_of_degree(nvars - 1, deg - first):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order, global or local, with a variable permutation.

    kind 'degrevlex' is the usual global degree-reverse-lexicographic
    order (a well-order).  kind 'negdegrevlex' is its local counterpart:
    lower total degree wins, so 1 > x_i for every variable, which is what
    reduction in the local ring at the origin needs for termination of
    the ecart-controlled normal form.

    Keys compare so that a larger key means a larger monomial.
    """

    KINDS = ("degrevlex", "negdegrevlex")

    def __init__(self, kind="degrevlex", permutation=None):
        if kind not in self.KINDS:
            raise RejectedInputError(f"unknown monomial order kind {kind!r}")
        self.kind = kind
        self.permutation = tuple(permutation) if permutation is not None else None
        if self.permutation is not None and sorted(self.permutation) != list(
            range(len(self.permutation))
        ):
            raise RejectedInputError("permutation must be a permutation of 0..n-1")

    @property
    def is_local(self):
        return self.kind == "negdegrevlex"

    @property
    def is_global(self):
        return self.kind == "degrevlex"

    def key(self, exps):
        if self.permutation is not None:
            exps = tuple(exps[p] for p in self.permutation)
        deg = sum(exps)
        head = -deg if self.is_local else deg
        return (head,) + tuple(-e for e in reversed(exps))

    def max_monomial(self, monomials):
        return max(monomials, key=self.key)

    def sorted_descending(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, permutation={self.permutation!r})"


GLOBAL_ORDER = MonomialOrder("degrevlex")
LOCAL_ORDER = MonomialOrder("negdegrevlex")


# ---------------------------------------------------------------------------
# polynomials


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise RejectedInputError(f"coefficient {c!r} is not rational")


class Polynomial:
    """Immutable multivariate polynomial with Fraction coefficients.

    ``terms`` maps exponent tuples to non-zero coefficients; zero
    coefficients are pruned eagerly so equal polynomials compare equal.
    All arithmetic requires both operands to share the same variable
    context.
    """

    __slots__ = ("context", "terms")

    def __init__(self, context, terms):
        context = tuple(context)
        clean = {}
        n = len(context)
        for mono, coeff in terms.items():
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            mono = tuple(mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise RejectedInputError(f"bad monomial {mono!r} for context {context!r}")
            clean[mono] = coeff
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors

    @classmethod
    def zero(cls, context):
        return cls(context, {})

    @classmethod
    def one(cls, context):
        return cls(context, {(0,) * len(context): Fraction(1)})

    @classmethod
    def constant(cls, context, c):
        return cls(context, {(0,) * len(context): _as_fraction(c)})

    @classmethod
    def variable(cls, context, name):
        context = tuple(context)
        try:
            i = context.index(name)
        except ValueError:
            raise RejectedInputError(f"unknown variable {name!r} in context {context!r}")
        mono = tuple(1 if j == i else 0 for j in range(len(context)))
        return cls(context, {mono: Fraction(1)})

    # -- basic queries

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def min_degree(self):
        """Lowest total degree among the terms; -1 for zero."""
        if not self.terms:
            return -1
        return min(monomial_degree(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.context), Fraction(0))

    def leading_term(self, order):
        """(monomial, coefficient) of the largest monomial under `order`."""
        if not self.terms:
            raise RejectedInputError("zero polynomial has no leading term")
        m = order.max_monomial(self.terms)
        return m, self.terms[m]

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    # -- arithmetic

    def _check_context(self, other):
        if self.context != other.context:
            raise RejectedInputError(
                f"context mismatch: {self.context!r} vs {other.context!r}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        self._check_context(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial(self.context, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.context, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Polynomial(self.context, {m: c * v for m, v in self.terms.items()})
        self._check_context(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return Polynomial(self.context, terms)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise RejectedInputError("exponent must be a non-negative integer")
        result = Polynomial.one(self.context)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c):
        return self * _as_fraction(c)

    def monic(self, order):
        _, lc = self.leading_term(order)
        return self.scale(Fraction(1) / lc)

    def term_mul(self, mono, coeff):
        """Multiply by coeff * x^mono without building a Polynomial."""
        mono = tuple(mono)
        coeff = _as_fraction(coeff)
        return Polynomial(
            self.context,
            {monomial_mul(m, mono): c * coeff for m, c in self.terms.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.constant(self.context, other)
            else:
                return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    # -- calculus and substitution

    def derivative(self, var):
        """Partial derivative with respect to a variable name or index."""
        if isinstance(var, str):
            var = self.context.index(var)
        terms = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            dm = m[:var] + (e - 1,) + m[var + 1 :]
            terms[dm] = terms.get(dm, Fraction(0)) + c * e
        return Polynomial(self.context, terms)

    def substitute(self, images):
        """Compose with a map sending each variable to a polynomial.

        `images` maps variable names to Polynomials sharing one target
        context; unnamed variables map to themselves when the target
        context still contains them.
        """
        if not images:
            return self
        target = next(iter(images.values())).context
        subs = []
        for name in self.context:
            if name in images:
                p = images[name]
                if p.context != target:
                    raise RejectedInputError("substitution images must share one context")
                subs.append(p)
            else:
                subs.append(Polynomial.variable(target, name))
        result = Polynomial.zero(target)
        power_cache = [{0: Polynomial.one(target)} for _ in subs]
        for m, c in self.terms.items():
            prod = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                cache = power_cache[i]
                if e not in cache:
                    best = max(k for k in cache if k <= e)
                    p = cache[best]
                    for k in range(best + 1, e + 1):
                        p = p * subs[i]
                        cache[k] = p
                prod = prod * cache[e]
            result = result + prod
        return result

    def translate(self, point):
        """Shift the origin: substitute x_i -> x_i + point_i."""
        if len(point) != len(self.context):
            raise RejectedInputError("translation point has wrong length")
        images = {
            name: Polynomial.variable(self.context, name)
            + Polynomial.constant(self.context, p)
            for name, p in zip(self.context, point)
        }
        return self.substitute(images)

    def evaluate(self, point):
        if len(point) != len(self.context):
            raise RejectedInputError("evaluation point has wrong length")
        point = [_as_fraction(p) for p in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    # -- formatting

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in GLOBAL_ORDER.sorted_descending(self.terms):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.context, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if not parts:
                parts.append(piece if c > 0 else f"-{piece}")
            else:
                parts.append(f"+ {piece}" if c > 0 else f"- {piece}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, context={self.context!r})"


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            tail = text[pos:].strip()
            if not tail:
                break
            raise RejectedInputError(f"cannot tokenize polynomial near {tail[:15]!r}")
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, context):
        self.tokens = tokens
        self.pos = 0
        self.context = tuple(context)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise RejectedInputError(f"expected {op!r} in polynomial text")

    def parse(self):
        p = self.expr()
        if self.pos != len(self.tokens):
            raise RejectedInputError("trailing junk in polynomial text")
        return p

    def expr(self):
        sign = 1
        kind, val = self.peek()
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                sign = -sign
            kind, val = self.peek()
        p = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self):
        p = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_ = self.take()
            if ekind != "int":
                raise RejectedInputError("exponent must be a non-negative integer")
            p = p**eval_
        return p

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            num = val
            pk, pv = self.peek()
            if pk == "op" and pv == "/":
                self.take()
                dk, dv = self.take()
                if dk != "int" or dv == 0:
                    raise RejectedInputError("malformed rational coefficient")
                return Polynomial.constant(self.context, Fraction(num, dv))
            return Polynomial.constant(self.context, num)
        if kind == "name":
            return Polynomial.variable(self.context, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "op" and val == "-":
            return -self.atom()
        raise RejectedInputError(f"unexpected token {val!r} in polynomial text")


def parse_polynomial(text, variables):
    """Parse the wire-format grammar into a Polynomial over `variables`."""
    if isinstance(text, Polynomial):
        if tuple(text.context) != tuple(variables):
            raise RejectedInputError("polynomial context does not match variables")
        return text
    return _Parser(_tokenize(str(text)), variables).parse()


# ---------------------------------------------------------------------------
# derived constructions


def jacobian_matrix(fs):
    """Rows of partial derivatives d f_i / d x_j."""
    fs = list(fs)
    if not fs:
        return []
    ctx = fs[0].context
    for f in fs:
        if f.context != ctx:
            raise RejectedInputError("jacobian needs one shared context")
    return [[f.derivative(j) for j in range(len(ctx))] for f in fs]


def jacobian_det(fs):
    """det(d f_i / d x_j) for a square system, computed exactly."""
    fs = list(fs)
    if not fs:
        raise RejectedInputError("empty system")
    if len(fs) != len(fs[0].context):
        raise RejectedInputError(
            f"square system required: {len(fs)} polynomials in {len(fs[0].context)} variables"
        )
    return poly_det(jacobian_matrix(fs))


def poly_det(rows):
    """Determinant of a square matrix of Polynomials (Laplace with memo)."""
    n = len(rows)
    if n == 0:
        raise RejectedInputError("empty matrix")
    ctx = rows[0][0].context
    memo = {}

    def rec(rset, cset):
        if len(rset) == 1:
            return rows[rset[0]][cset[0]]
        key = (rset, cset)
        if key in memo:
            return memo[key]
        i = rset[0]
        rest = rset[1:]
        total = Polynomial.zero(ctx)
        for pos, j in enumerate(cset):
            entry = rows[i][j]
            if entry.is_zero:
                continue
            sub = rec(rest, cset[:pos] + cset[pos + 1 :])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    idx = tuple(range(n))
    return rec(idx, idx)


def minors(mat, k):
    """All k x k minor determinants, in lexicographic order of
    (row-set, column-set).  The fixed order makes every ideal built from
    minors reproducible byte for byte."""
    rows = [list(r) for r in mat]
    if not rows or not rows[0]:
        raise RejectedInputError("empty matrix")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise RejectedInputError("ragged matrix")
    if not (1 <= k <= min(len(rows), ncols)):
        raise RejectedInputError(f"minor size {k} out of range")
    out = []
    for rset in itertools.combinations(range(len(rows)), k):
        for cset in itertools.combinations(range(ncols), k):
            out.append(poly_det([[rows[i][j] for j in cset] for i in rset]))
    return out
