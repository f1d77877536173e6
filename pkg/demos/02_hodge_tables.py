"""
Cohomology tables in four flavors
=================================

For a structure with an integrable complex operator we can compute, in
exact arithmetic, the dimensions of four cohomology theories on the
invariant forms: Dolbeault, conjugate Dolbeault, Bott-Chern, and Aeppli,
plus the plain de Rham Betti numbers.
"""

from nilcoh import (
    catalog_get,
    hodge_number,
    hodge_table,
    derham_betti,
    class_representatives,
    natural_map_rank,
    THEORIES,
)

spec = catalog_get("iwasawa").spec
print("structure:", spec.name, " n =", spec.n)
print("available theories:", ", ".join(sorted(THEORIES)))

# Single numbers first.  Bott-Chern classes have representatives that are
# closed for both del and delbar; Aeppli is its dual quotient.
print("\nh_bc(1,1)     =", hodge_number(spec, "bott_chern", 1, 1))
print("h_aeppli(1,1) =", hodge_number(spec, "aeppli", 1, 1))
print("h_dolbeault(0,1) =", hodge_number(spec, "dolbeault", 0, 1))

# Whole tables: table.entries[p][q] for 0 <= p, q <= n.
for theory in ("dolbeault", "bott_chern", "aeppli"):
    table = hodge_table(spec, theory)
    print("\n%s (validity: %s):" % (theory, table.validity))
    for row in table.entries:
        print("  ", row)

# The tables are not independent: conjugation swaps p and q inside
# Bott-Chern and Aeppli, and duality pairs h_bc(p,q) with h_a(n-p,n-q).
bc = hodge_table(spec, "bott_chern").entries
ae = hodge_table(spec, "aeppli").entries
n = spec.n
assert all(bc[p][q] == bc[q][p] for p in range(n + 1) for q in range(n + 1))
assert all(
    bc[p][q] == ae[n - p][n - q] for p in range(n + 1) for q in range(n + 1)
)
print("\nchecked: bc symmetric in (p,q), and bc(p,q) == aeppli(n-p,n-q)")

# de Rham Betti numbers of the underlying real structure:
print("betti =", derham_betti(spec))

# We can also look at actual representatives, not just dimensions.
reps = class_representatives(spec, "bott_chern", 0, 1)
print("\nbott_chern (0,1) classes of the Iwasawa structure:")
for form in reps:
    print("  ", form)

# And at the natural comparison map from Bott-Chern to Aeppli classes:
# its rank measures how many Bott-Chern classes survive into the weaker
# quotient instead of becoming (del + delbar)-exact there.
rank = natural_map_rank(spec, 0, 1)
print("\nrank of bott_chern(0,1) -> aeppli(0,1):", rank,
      "  (h_bc = %d, h_a = %d)" % (bc[0][1], ae[0][1]))

# On a torus everything collapses to binomial coefficients.
torus = catalog_get("torus(2)").spec
table = hodge_table(torus, "bott_chern")
print("\ntorus(2) bott_chern table (binomials):")
for row in table.entries:
    print("  ", row)
