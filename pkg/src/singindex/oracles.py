"""Independent cross-check implementations.

Each routine here recomputes a quantity of the main pipeline by a
different method: colengths by Macaulay-style truncated linear algebra
with no standard bases anywhere, local degrees of plane and space germs
by explicit boundary-surface winding counts in exact rational arithmetic,
and Burnside products by orbit counting on explicit product G-sets.
They back the test suite and the CLI's --oracle mode.
"""

from __future__ import annotations

from fractions import Fraction

from .burnside import BurnsideElement, _compose
from .errors import RejectedInputError
from .grobner import INFINITE
from .poly import (
    GLOBAL_ORDER,
    Polynomial,
    monomial_degree,
    monomials_up_to_degree,
    parse_polynomial,
)

# ---------------------------------------------------------------------------
# Macaulay truncation colength


def macaulay_colength(generators, variables=None, max_truncation=32):
    """Local colength by truncated linear algebra.

    For truncation degree T, the dimension of the span of monomials of
    degree < T modulo the truncated multiples of the generators computes
    dim of the quotient by (I + m^T).  The sequence is non-decreasing in
    T and, once two consecutive values agree, Nakayama pins it there
    forever, so that value is the local colength.  Returns INFINITE when
    no stabilization happens up to max_truncation.
    """
    if variables is not None:
        gens = [parse_polynomial(g, variables) for g in generators]
    else:
        gens = list(generators)
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return INFINITE
    ctx = gens[0].context
    if any(g.min_degree() == 0 for g in gens):
        return 0
    nvars = len(ctx)

    def corank(truncation):
        cols = monomials_up_to_degree(nvars, truncation)
        cols.sort(key=GLOBAL_ORDER.key, reverse=True)
        index = {m: i for i, m in enumerate(cols)}
        pivots = {}  # position -> sparse row {position: coeff}, leading 1

        def insert(vec):
            while vec:
                lead = min(vec)
                row = pivots.get(lead)
                if row is None:
                    inv = Fraction(1) / vec[lead]
                    pivots[lead] = {k: v * inv for k, v in vec.items()}
                    return
                f = vec[lead]
                for k, v in row.items():
                    s = vec.get(k, Fraction(0)) - f * v
                    if s == 0:
                        vec.pop(k, None)
                    else:
                        vec[k] = s
        for g in gens:
            room = truncation - g.min_degree()
            for m in monomials_up_to_degree(nvars, room):
                vec = {}
                for mono, c in g.term_mul(m, Fraction(1)).terms.items():
                    if monomial_degree(mono) < truncation:
                        vec[index[mono]] = c
                insert(vec)
        return len(cols) - len(pivots)

    previous = corank(1)
    for truncation in range(2, max_truncation + 1):
        current = corank(truncation)
        if current == previous:
            return current
        previous = current
    return INFINITE


# ---------------------------------------------------------------------------
# winding-number degree of a plane germ


def _circle_points(radius, samples):
    """Rational points exactly on the circle of rational radius, via the
    half-angle parametrization, closed up through (-radius, 0)."""
    pts = []
    span = 24
    for i in range(samples):
        t = Fraction(-span, 1) + Fraction(2 * span * i, samples)
        denom = 1 + t * t
        pts.append((radius * (1 - t * t) / denom, radius * 2 * t / denom))
    pts.append((-radius, Fraction(0)))
    return pts


def winding_degree(components, variables=None, radius=Fraction(1, 4), samples=720):
    """Local degree of a plane map germ as the winding number of its image
    curve along a small circle, computed exactly.

    The circle is sampled at rational points lying exactly on it;
    parameter intervals are bisected until consecutive image vectors stay
    within a quarter turn of each other, and the winding number of the
    resulting polygon is counted by signed crossings of the positive
    horizontal axis.
    """
    if variables is not None:
        comps = [parse_polynomial(c, variables) for c in components]
    else:
        comps = list(components)
    if len(comps) != 2 or len(comps[0].context) != 2:
        raise RejectedInputError("winding degree needs a plane map germ")

    def image(pt):
        v = (comps[0].evaluate(pt), comps[1].evaluate(pt))
        if v == (0, 0):
            raise RejectedInputError(
                "map vanishes on the sample circle; shrink the radius"
            )
        return v

    points = _circle_points(radius, samples)
    points.append(points[0])  # close the cycle
    values = [image(p) for p in points]

    # refine until every consecutive pair is within a quarter turn
    for _round in range(24):
        stable = True
        new_points = []
        new_values = []
        for k in range(len(points) - 1):
            new_points.append(points[k])
            new_values.append(values[k])
            a, b = values[k], values[k + 1]
            if a[0] * b[0] + a[1] * b[1] <= 0:
                stable = False
                mid = (
                    (points[k][0] + points[k + 1][0]) / 2,
                    (points[k][1] + points[k + 1][1]) / 2,
                )
                # project the chord midpoint back onto the circle exactly
                mid = _reproject(mid, radius)
                new_points.append(mid)
                new_values.append(image(mid))
        new_points.append(points[-1])
        new_values.append(values[-1])
        points, values = new_points, new_values
        if stable:
            break
    else:
        raise RejectedInputError("winding refinement failed to converge")

    # count signed crossings of the positive horizontal axis; points with
    # second coordinate 0 count as the upper side (the crossing abscissa
    # has the sign of the edge cross product, exact in rationals)
    winding = 0
    for k in range(len(values) - 1):
        (x1, y1), (x2, y2) = values[k], values[k + 1]
        if (y1 < 0) == (y2 < 0):
            continue
        cross = x1 * y2 - x2 * y1
        if cross == 0:
            raise RejectedInputError("polygon edge passed through the origin")
        if y1 < 0:
            if cross > 0:
                winding += 1
        else:
            if cross < 0:
                winding -= 1
    return winding


def _reproject(pt, radius):
    """A rational point on the circle near pt, again via half angles."""
    x, y = pt
    if x == -radius and y == 0:
        return (-radius, Fraction(0))
    t = y / (x + radius)  # tan of the half angle
    denom = 1 + t * t
    return (radius * (1 - t * t) / denom, radius * 2 * t / denom)


# ---------------------------------------------------------------------------
# boundary degree of a space germ


def boundary_degree_3d(
    components, variables=None, radius=Fraction(1, 4), grid=8
):
    """Local degree of a germ R^3 -> R^3 as the degree of its restriction
    to the boundary of a small cube: the image triangles are tested for
    covering a fixed generic ray, each pierced triangle contributing its
    orientation sign.  All arithmetic is exact; degenerate ray positions
    are retried with other fixed directions."""
    if variables is not None:
        comps = [parse_polynomial(c, variables) for c in components]
    else:
        comps = list(components)
    if len(comps) != 3 or len(comps[0].context) != 3:
        raise RejectedInputError("boundary degree needs a three-variable germ")

    h = radius

    def cube_faces():
        # (axis, sign): outward normal along +-axis
        for axis in range(3):
            for sign in (1, -1):
                yield axis, sign

    def face_point(axis, sign, u, v):
        pt = [Fraction(0)] * 3
        pt[axis] = h * sign
        others = [a for a in range(3) if a != axis]
        pt[others[0]] = -h + 2 * h * u
        pt[others[1]] = -h + 2 * h * v
        return tuple(pt)

    triangles = []
    for axis, sign in cube_faces():
        for i in range(grid):
            for j in range(grid):
                u0, u1 = Fraction(i, grid), Fraction(i + 1, grid)
                v0, v1 = Fraction(j, grid), Fraction(j + 1, grid)
                a = face_point(axis, sign, u0, v0)
                b = face_point(axis, sign, u1, v0)
                c = face_point(axis, sign, u1, v1)
                d = face_point(axis, sign, u0, v1)
                # orient counter-clockwise as seen from outside
                others = [ax for ax in range(3) if ax != axis]
                flip = (sign < 0) ^ ((axis, others[0], others[1]) not in (
                    (0, 1, 2),
                    (1, 2, 0),
                    (2, 0, 1),
                ))
                if flip:
                    triangles.append((a, c, b))
                    triangles.append((a, d, c))
                else:
                    triangles.append((a, b, c))
                    triangles.append((a, c, d))

    def image(pt):
        v = tuple(c.evaluate(pt) for c in comps)
        if v == (0, 0, 0):
            raise RejectedInputError(
                "map vanishes on the sample cube; shrink the radius"
            )
        return v

    images = {}

    def img(pt):
        if pt not in images:
            images[pt] = image(pt)
        return images[pt]

    rays = [
        (Fraction(1), Fraction(1, 3), Fraction(1, 7)),
        (Fraction(2, 5), Fraction(1), Fraction(1, 11)),
        (Fraction(1, 13), Fraction(3, 7), Fraction(1)),
        (Fraction(-1), Fraction(1, 5), Fraction(2, 9)),
    ]
    for ray in rays:
        total = 0
        degenerate = False
        for tri in triangles:
            a, b, c = (img(p) for p in tri)
            det = _det3(a, b, c)
            sol = _solve3(a, b, c, ray)
            if sol is None:
                # singular matrix: degenerate only if the ray lies in the span
                if _in_degenerate_cone(a, b, c, ray):
                    degenerate = True
                    break
                continue
            l1, l2, l3 = sol
            if l1 > 0 and l2 > 0 and l3 > 0:
                total += 1 if det > 0 else -1
            elif l1 >= 0 and l2 >= 0 and l3 >= 0:
                degenerate = True
                break
        if not degenerate:
            return total
    raise RejectedInputError("all ray directions were degenerate; refine the grid")


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
    )


def _solve3(a, b, c, r):
    """Solve x*a + y*b + z*c = r; None when the columns are dependent."""
    det = _det3(a, b, c)
    if det == 0:
        return None
    x = _det3(r, b, c) / det
    y = _det3(a, r, c) / det
    z = _det3(a, b, r) / det
    return x, y, z


def _in_degenerate_cone(a, b, c, ray):
    """Conservative test: the ray could meet a degenerate (flat) image
    triangle, so the caller should pick another ray."""
    # ray lies in the span of a, b, c when the 4-point configuration is flat
    return _det3(a, b, ray) == 0 and _det3(a, c, ray) == 0 and _det3(b, c, ray) == 0


# ---------------------------------------------------------------------------
# orbit-counting Burnside product


def burnside_mul_by_orbits(group, class_a, class_b):
    """Product [G/A][G/B] by decomposing the explicit product set of
    cosets into orbits and classifying each stabilizer."""
    classes = group.classes()
    a_sub = classes[class_a].representative
    b_sub = classes[class_b].representative
    cosets_a = group.cosets(a_sub)
    cosets_b = group.cosets(b_sub)

    def act(g, pair):
        ca, cb = pair
        return (
            frozenset(_compose(g, x) for x in ca),
            frozenset(_compose(g, x) for x in cb),
        )

    points = [(ca, cb) for ca in cosets_a for cb in cosets_b]
    unseen = set(range(len(points)))
    position = {p: i for i, p in enumerate(points)}
    coeffs = {}
    while unseen:
        start = unseen.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for g in group.generators:
                nxt = position[act(g, points[current])]
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        unseen -= orbit
        stab = frozenset(
            g for g in group.elements if act(g, points[start]) == points[start]
        )
        idx = group.class_of(stab)
        coeffs[idx] = coeffs.get(idx, 0) + 1
    return BurnsideElement(group, coeffs)


def restriction_by_orbits(group, class_index, subgroup):
    """H-orbit decomposition of G/K computed on the explicit coset set;
    independent route for checking restriction followed by induction."""
    from .burnside import subgroup_as_group

    h_group = subgroup_as_group(group, subgroup)
    k_sub = group.classes()[class_index].representative
    cosets = group.cosets(k_sub)
    position = {c: i for i, c in enumerate(cosets)}
    unseen = set(range(len(cosets)))
    coeffs = {}
    while unseen:
        start = unseen.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for h in h_group.elements:
                nxt = position[frozenset(_compose(h, x) for x in cosets[current])]
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        unseen -= orbit
        stab = frozenset(
            h
            for h in h_group.elements
            if frozenset(_compose(h, x) for x in cosets[start]) == cosets[start]
        )
        idx = h_group.class_of(stab)
        coeffs[idx] = coeffs.get(idx, 0) + 1
    return BurnsideElement(h_group, coeffs), h_group
