"""
Parsing structure files and validating structures
=================================================

A structure file lists the differentials of the holomorphic generator
one-forms a1..an.  Everything else (the conjugate differentials, the full
exterior algebra) follows by conjugation and the Leibniz rule.
"""

from nilcoh import parse_structure_file, validate, format_structure_file, d
from nilcoh.forms import alpha

# The complex Heisenberg structure: two closed generators and
# d a3 = -a1^a2.  Coefficients are always parenthesized, generators are
# a<j>, conjugates are ~a<j>.
text = """\
algebra iwasawa dim 3
d a3 = (-1) * a1^a2
"""

spec = parse_structure_file(text)
print("parsed:", spec.name, "with n =", spec.n)
print("d a3   =", spec.d_alpha(3))
print("d ~a3  =", spec.d_alphabar(3))  # forced by conjugation

# validate() checks d^2 = 0 on every generator (enough, since d is an
# anti-derivation) and then runs the nilpotency filtration: the growing
# chain of subspaces S_1 <= S_2 <= ... where S_l collects the one-forms
# whose differential lives in the exterior square of S_{l-1}.
report = validate(spec)
print("jacobi_ok   =", report.jacobi_ok)
print("nilpotent_J =", report.nilpotent_J)
print("filtration  =", report.filtration)  # [4, 6]: two-step nilpotent

# d extends to arbitrary forms:
print("d(a3 ^ ~a3) =", d(spec, spec.d_alpha(3)))  # zero, of course
print("d(a3)       =", d(spec, alpha(3)))

# A structure that fails integrability: d a2 = a1 ^ ~a2 forces
# d(d a2) = a1^a2^~a1, which is not zero.
bad = parse_structure_file("algebra broken dim 2\nd a2 = (1) * a1^~a2\n")
report = validate(bad)
print("\nbroken structure: jacobi_ok =", report.jacobi_ok)
for index, value in report.failing_generators:
    print("  d^2 a%d = %s" % (index, value))

# Nilpotency can fail even when d^2 = 0.  Here the filtration stalls
# at dimension 2 and never reaches all 4 real directions:
solv = parse_structure_file(
    "algebra solv dim 2\nd a2 = (1) * a2^~a1 + (1) * a1^~a1\n"
)
report = validate(solv)
print("\nsolvable structure: jacobi_ok =", report.jacobi_ok)
print("  nilpotent_J =", report.nilpotent_J, "- filtration stalls:", report.filtration)

# Serialization is canonical: parse(format(spec)) == spec, and formatting
# twice gives byte-identical text.
print("\ncanonical form:")
print(format_structure_file(spec), end="")
