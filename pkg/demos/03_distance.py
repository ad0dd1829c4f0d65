"""
Exact minimum distance
======================

Two engines: a Gray-code walk over the generator row space, and a scan of
low-weight Pauli vectors against the stabilizer.  They check each other.
"""

import time

from qrm import build_generator, distance_lowweight, distance_rowspace, six04

code = build_generator(3, 1)
print(distance_rowspace(code.generator))
print(distance_lowweight(code.stabilizer, 3))

print(distance_rowspace(six04().generator))

# 26 generator rows: 2**26 - 1 nonzero combinations
t0 = time.perf_counter()
res = distance_rowspace(build_generator(4, 1).generator)
print(f"{time.perf_counter() - t0:.2f} s")
print(res)

# [[32,10,6]]: 42 generator rows is too many to walk, so scan instead.
# Nothing of weight <= 5 commutes with all 22 stabilizer rows.
code = build_generator(5, 2)
t0 = time.perf_counter()
res = distance_lowweight(code.stabilizer, 6)
print(f"{time.perf_counter() - t0:.2f} s")
print(res)

# degenerate distance: ignore vectors that are themselves stabilizers
print(distance_lowweight(code.stabilizer, 6, logicals=code.generator))
