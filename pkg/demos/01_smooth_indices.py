"""Indices of singular points on smooth ambient space.

A walkthrough of the three index computations that need nothing but a
finite dimensional local algebra: the colength index of a holomorphic
vector field, the signature index of a real germ, and the minors-ideal
index of a collection of sections.
"""

from singindex import (
    SectionCollection,
    VectorFieldGerm,
    collection_index,
    elk_form,
    elk_index,
    palamodov_index,
    realify,
)
from singindex.oracles import winding_degree

print("=" * 64)
print("1. The colength index of a holomorphic vector field")
print("=" * 64)

# The index of an isolated zero of a holomorphic vector field equals the
# dimension of the local algebra cut out by its components.
for components in (["z1", "z2"], ["z1^2", "z2^3"], ["z1^2 - z2", "z2^2"]):
    germ = VectorFieldGerm(("z1", "z2"), components)
    print(f"  index of {components} = {palamodov_index(germ)}")

print()
print("=" * 64)
print("2. The signature index of a real germ")
print("=" * 64)

# Over the reals the local degree is read off a symmetric bilinear form:
# pick any linear functional positive on the class of the Jacobian
# determinant; the signature of the induced pairing is the degree.
plane = ("x", "y")
for components in (["x^2 - y^2", "2*x*y"], ["x^3", "y"], ["x*y", "x^2 - y^2"]):
    germ = VectorFieldGerm(plane, components, field="R")
    form = elk_form(germ)
    winding = winding_degree(components, plane)
    print(
        f"  {components}: algebra dimension {form.algebra.dimension}, "
        f"signature {form.signature()}, winding-number check {winding}"
    )

# The map z -> z^2 of the complex line, written as a real planar system,
# has degree 2 while its local algebra is 4-dimensional: the signature
# sees the difference.
real_vars, real_comps = realify(("z",), ["z^2"])
print(f"  realified z^2 over {real_vars}: "
      f"index {elk_index(VectorFieldGerm(real_vars, real_comps, field='R'))}")

print()
print("=" * 64)
print("3. Collections of sections and their minors ideal")
print("=" * 64)

# A collection assigns to each part k_i of a partition of n a group of
# m - k_i + 1 sections of a rank-m bundle; the index is the colength of
# the ideal of maximal minors of the group matrices.
coll = SectionCollection(
    ("z1", "z2"),
    rank=2,
    partition=[1, 1],
    matrices=[[["z1^2", "0"], ["0", "1"]], [["1", "0"], ["0", "z2^3"]]],
)
print(f"  two groups with determinants z1^2 and z2^3: index {collection_index(coll)}")

# With a single group of one column the collection is just a vector
# field and the colength index comes back.
coll = SectionCollection(
    ("z1", "z2", "z3"),
    rank=3,
    partition=[3],
    matrices=[[["z1"], ["z2"], ["z3"]]],
)
print(f"  single linear column: index {collection_index(coll)}")
