"""
Syndrome decoding
=================

A lookup table of minimum-weight coset leaders, and a seeded Monte Carlo run
with a fixed number of errors per trial.
"""

from qrm import build_decoder_table, build_generator, correctability_check, simulate, syndrome
from qrm.pauli import PauliVector

code = build_generator(3, 1)
e = PauliVector.from_letters("IIYIIIII")
print("syndrome of", e.letters(), "->", syndrome(code, e).bits)

table = build_decoder_table(code, 1)
print("populated syndromes:", table.coverage, "of", 1 << code.stabilizer.n_rows)
print("decoded leader:", table.decode(e).letters())

# every weight-1 error is corrected; weight 2 is beyond the radius
print("correct 1 error:", correctability_check(code, 1))
print("correct 2 errors:", correctability_check(code, 2))

print(simulate(code, 1, 10_000, seed=7))
print(simulate(code, 2, 10_000, seed=7))

# the same seed gives the same counts regardless of thread count
big = build_generator(5, 2)
a = simulate(big, 2, 10_000, seed=11, workers=1)
b = simulate(big, 2, 10_000, seed=11, workers=4)
print(a)
print("identical:", a == b)
