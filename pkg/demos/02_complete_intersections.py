"""Indices of 1-forms on isolated complete intersection singularities.

The quadric cone x^2 + y^2 + z^2 = 0 in C^3 is the simplest singular
complete intersection; this script walks through every index the library
attaches to a 1-form on it and the identities tying them together.
"""

from singindex import (
    ICISGerm,
    gsv_index_1form,
    homological_index_1form,
    icis_report,
    isolatedness_certificate,
    milnor_number,
    radial_index_1form,
    radial_index_vf_from_gsv,
)

space = ("x", "y", "z")
cone = ICISGerm(space, ["x^2 + y^2 + z^2"])
dz = ["0", "0", "1"]

print("the A1 cone: x^2 + y^2 + z^2 = 0 in C^3, with the 1-form dz")
print("-" * 64)

# Isolatedness is certified by the colength of the singular-locus ideal
# (equations plus maximal minors of their Jacobian).
print(f"isolated-singularity certificate (colength): {isolatedness_certificate(cone)}")

# The index on the singular variety: colength of the ideal generated by
# the equation and the maximal minors of the matrix stacking df and the
# form's coefficients.
gsv = gsv_index_1form(cone, dz)
print(f"index via the minors ideal:                  {gsv}")

# The Milnor number comes from slicing with generic hyperplanes: each
# slice satisfies  mu(V) + mu(V . H) = colength(f, minors(df, dl)).
mu = milnor_number(cone, seed=0)
print(f"Milnor number via the slicing recursion:     {mu}")

# The radial index differs from the minors-ideal index exactly by mu.
radial = radial_index_1form(cone, dz)
print(f"radial index = {gsv} - {mu}:                       {radial}")

# The homological index (Euler characteristic of the contraction complex
# of differential forms) agrees with the minors-ideal index on complete
# intersections; the library computes it through that equality.
print(f"homological index:                           {homological_index_1form(cone, dz)}")

print()
print("one call assembles everything with its certificates:")
report = icis_report(cone, dz)
print(f"  gsv={report.gsv} milnor={report.milnor} radial={report.radial} "
      f"homological={report.homological}")
print(f"  certificates: {report.certificates}")

print()
print("vector fields instead of 1-forms")
print("-" * 64)
# For vector fields on an n-dimensional germ the conversion identity
# picks up a sign: radial = gsv - (-1)^n mu.  The geometric gsv of a
# vector field is not a colength (its defining frame involves complex
# conjugation), so the library only exposes the arithmetic identity.
print(f"  gsv=2, mu=1, n=2  ->  radial {radial_index_vf_from_gsv(2, 1, 2)}")
print(f"  gsv=0, mu=1, n=3  ->  radial {radial_index_vf_from_gsv(0, 1, 3)}")

print()
print("a deeper cone: x^3 + y^3 + z^3")
print("-" * 64)
fermat = ICISGerm(space, ["x^3 + y^3 + z^3"])
print(f"  Milnor number: {milnor_number(fermat)} (the Jacobian ideal "
      f"(x^2, y^2, z^2) has colength 8)")
generic = ["3", "-2", "5"]
print(f"  radial index of a generic linear differential: "
      f"{radial_index_1form(fermat, generic)}")
