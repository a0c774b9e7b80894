"""Walkthrough: permutation modules over the rationals.

A permutation presentation lists generators as index arrays; the module
A*g is the orbit span of a starting vector.  Over Q every permutation
module is semisimple, so complete decompositions always exist; the
search still has to find them, and every leaf is certified.
"""

from cyclomod import QQ
from cyclomod.decompose import complete_decomposition
from cyclomod.endo import compute_end
from cyclomod.perms import (
    PermutationPresentation,
    left_translation_action,
    permutation_module,
    symmetric_group,
)

# --- the natural S_3 module on Q^3 --------------------------------------

natural = PermutationPresentation(3, [("s1", [1, 0, 2]), ("s2", [0, 2, 1])])
m = permutation_module(natural, (1, 0, 0))
print(f"natural module: dim {m.dim}")

e = compute_end(m)
print(f"endomorphism algebra dimension: {e.dim}")

report = complete_decomposition(m)
print(f"signature: {report.signature}")
for k, block in enumerate(report.summands):
    print(f"  summand {k}: dim {block.dim}")
    for v in block.ambient_basis:
        print(f"    ({', '.join(str(x) for x in v)})")

# The 1-dim piece is the invariant line Q*(1,1,1), printed as whatever
# scalar multiple the splitting produced; the 2-dim piece is the
# standard representation {v : v1+v2+v3 = 0}.

# --- the regular module: S_3 acting on itself ----------------------------

elements = symmetric_group(3)
print(f"\ngroup elements (lexicographic): {elements}")
s1 = elements.index((1, 0, 2))
s2 = elements.index((0, 2, 1))
regular = left_translation_action(elements, [s1, s2])
m6 = permutation_module(regular, (1, 0, 0, 0, 0, 0))
print(f"regular module: dim {m6.dim}")

report6 = complete_decomposition(m6)
print(f"signature: {report6.signature}")
print(f"fully decomposed: {report6.fully_decomposed}")
# 1 + 1 + 2 + 2: trivial, sign, and the standard representation twice,
# exactly the squares-sum-to-6 pattern of the S_3 character table.

# --- a generator that misses part of the space ---------------------------

half = permutation_module(natural, ("1/2", "-1/2", "0"))
print(f"\nmodule of (1/2, -1/2, 0): dim {half.dim}")
report_half = complete_decomposition(half)
print(f"signature: {report_half.signature}")
# The orbit of a zero-sum vector never leaves the standard plane, so the
# module is already irreducible: one leaf, certified indecomposable.
cert = report_half.certificates[0]
print(f"leaf verdict: {cert.verdict} ({cert.mode})")
