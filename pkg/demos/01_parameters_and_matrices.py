"""
Code parameters and generator matrices
======================================

Build the family members for small r and t and look at the matrices.
"""

from qrm import build_generator, format_code, qrm_params
from qrm.cli import table_text

# every (r, t) pair gives n = 2**r, a formula for k, and d = 2**t + 2**(t-1)
for r, t in [(3, 1), (4, 1), (5, 2), (6, 3)]:
    print(r, t, qrm_params(r, t))

# the full grid, columns indexed by d; negative k means the construction
# does not give a code there
print(table_text())

# the smallest useful member, generator block first then its stabilizer
code = build_generator(3, 1)
print(format_code(code))

# the r=2 seed matrix fails the conditions; the report says where
print(format_code(build_generator(2, 1)))
