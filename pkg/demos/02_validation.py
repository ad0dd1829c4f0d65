"""
Checking the stabilizer conditions
==================================

A generator/stabilizer pair is valid when the stabilizer rows commute with
each other and with every generator row.
"""

from qrm import build_generator, derive_stabilizer, stabilizer_direct, validate
from qrm.construct import same_rowspace, symplectic_gram
from qrm.gf2 import rank
from qrm.report import duality_report, rotation_report

for r, t in [(3, 1), (5, 2), (4, 2), (2, 1)]:
    rep = validate(build_generator(r, t))
    print((r, t), rep.to_dict())

# the stabilizer is the symplectic complement of the generator
code = build_generator(5, 2)
h = derive_stabilizer(code)
print("rank", rank(h), "self-commuting", not any(map(any, symplectic_gram(h, h))))

# building the stabilizer directly as the (r, r-t) generator shares most,
# but not all, of that space
direct = stabilizer_direct(5, 2).generator
print("equal row spaces:", same_rowspace(h, direct))
print(duality_report(5, 2))

# which rotation of the last dual row gives a commuting set
print(rotation_report(5, 2, shifts=range(6)))
