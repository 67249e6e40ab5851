"""
Max-min composition, step by step
=================================

A rule "IF A THEN B" becomes a relation matrix R with
R[i][j] = min(a[i], b[j]); feeding an observed grade vector through
R with the max-min composition yields the inferred output grades.

The five-sample vectors below make every entry easy to verify by hand.
"""

import numpy as np

from fuzzreg import build_relation, cri, union

a = [1.0, 0.5, 0.1, 0.0, 0.0]  # falling antecedent grades
b = [0.0, 0.0, 0.1, 0.5, 1.0]  # rising consequent grades

relation = build_relation(a, b)
print("R = min(a[i], b[j]):")
print(relation.entries)

# composing the relation with the antecedent itself recovers the
# consequent exactly whenever some antecedent grade equals 1
composed = cri(relation, a)
print("\ncri(R, a)  =", composed.tolist())
print("consequent =", b)

# mind the fourth column: max(min(1, .5), min(.5, .5), min(.1, .1)) = 0.5,
# not the 0.1 a quick glance at the third column might suggest
col = 3
contributions = [float(min(a[i], relation.entries[i][col])) for i in range(5)]
print(f"\ncolumn {col} contributions: {contributions} -> max = {max(contributions)}")

# a weaker observation composes to a weaker conclusion (monotonicity)
weak = np.multiply(a, 0.4)
print("\ncri(R, 0.4 * a) =", cri(relation, weak).tolist())

# several rules aggregate by elementwise max
other = build_relation([0.0, 0.2, 1.0, 0.2, 0.0], [1.0, 0.5, 0.0, 0.0, 0.0])
combined = union(cri(relation, a), cri(other, a))
print("\nunion of two rule outputs =", combined.tolist())
