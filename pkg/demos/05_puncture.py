"""
Deleting a qubit
================

Puncturing the self-dual [[6,0,4]] code at any position gives a perfect
[[5,1,3]] code.
"""

from qrm import build_decoder_table, distance_lowweight, format_code, puncture, six04

parent = six04()
print(format_code(parent))

for pos in range(parent.n):
    code = puncture(parent, pos)
    d = distance_lowweight(code.stabilizer, code.n, logicals=code.generator).value
    table = build_decoder_table(code, 1)
    print(pos, code.label, "d =", d, "syndromes", table.coverage, "/", 1 << (code.n - code.k))

print(format_code(puncture(parent, 0)))
