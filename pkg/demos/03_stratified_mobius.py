"""Moebius inversion on stratification posets.

On a stratified variety the radial index, the Euler obstruction and the
Nash-bundle index of a 1-form determine each other through integer slice
data n_ij on the poset of strata.  All topology enters as integers; the
conversions themselves are exact poset combinatorics.
"""

from singindex import (
    IndexVector,
    SliceData,
    StratPoset,
    det_m,
    det_n,
    eu_from_radial,
    mobius_inverse,
    phn_from_radial,
    radial_from_eu,
    radial_from_phn,
)

print("=" * 64)
print("1. A three-stratum cone: point < edge curve < surface")
print("=" * 64)

poset = StratPoset(["origin", "curve", "surface"], [(0, 1), (1, 2)])
data = SliceData(poset, {(0, 1): 2, (0, 2): -1, (1, 2): 1})
inverse = mobius_inverse(data)
print(f"  slice data n: {dict(sorted(data.entries.items()))}")
print(f"  inverse    m: {dict(sorted(inverse.items()))}")

# radial index of a form on the closure of the top stratum from the
# Euler obstructions of the stratum closures, and back
eu = IndexVector([1, 0, 3], "Eu")
radial_top = radial_from_eu(data, eu)
print(f"  obstructions {eu.values} assemble to radial index {radial_top}")
rad = IndexVector(
    [radial_from_eu(data, eu, target=j) for j in range(poset.size)], "radial"
)
print(f"  per-closure radial vector {rad.values} inverts back to "
      f"Eu(top) = {eu_from_radial(data, rad)}")

print()
print("=" * 64)
print("2. Generic determinantal varieties: closed binomial slice data")
print("=" * 64)

# On the rank stratification of m x n matrices the slice numbers have a
# closed binomial form, and the inverse pair just flips one sign factor.
for m, n in [(2, 2), (2, 3), (3, 3)]:
    t = min(m, n)
    n_row = [[det_n(m, n, i, j) if i <= j else 0 for j in range(1, t + 1)] for i in range(1, t + 1)]
    m_row = [[det_m(m, n, i, j) if i <= j else 0 for j in range(1, t + 1)] for i in range(1, t + 1)]
    print(f"  ({m},{n}): n = {n_row}   m = {m_row}")

print()
print("=" * 64)
print("3. Nash-bundle indices on the rank chain")
print("=" * 64)

# For a determinantal singularity of type (2,3,2): the chain has two
# strata.  Given radial indices and reduced Euler characteristics of the
# essential smoothings per stratum, the Nash-bundle index of the form on
# each closure follows, and the top radial index comes back exactly.
m, n, t = 2, 3, 2
rads = [1, 4]       # radial indices on the two stratum closures
chis = [0, -1]      # reduced Euler characteristics of their smoothings
dims = [2, 4]       # stratum closure dimensions
phn = []
for target in range(1, t + 1):
    mcol = [det_m(m, n, i, target) for i in range(1, target + 1)]
    phn.append(
        phn_from_radial(
            target, mcol, IndexVector(rads[:target], "radial"),
            chis[:target], dims[:target],
        )
    )
print(f"  radial {rads}, chibar {chis} -> Nash-bundle indices {phn}")
ncol = [det_n(m, n, i, t) for i in range(1, t + 1)]
back = radial_from_phn(t, ncol, IndexVector(phn, "PHN"), dims[-1], chis[-1])
print(f"  reassembled top radial index: {back} (started from {rads[-1]})")
