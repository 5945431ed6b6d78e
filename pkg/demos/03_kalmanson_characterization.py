"""Which metrics come from planar resistor networks?

Every such metric satisfies the Kalmanson inequalities, but the converse
fails. ``characterize`` runs two independent tests (minor signs of the
embedding, and the dual response matrix built from the split decomposition)
and reports both. Here we look for a metric that is Kalmanson yet not
electrical, and print the certificate.
"""

import random
from fractions import Fraction

from circnet import characterize, is_kalmanson, is_metric, split_decomposition
from circnet.cli import report_text

R = [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
print("unit star")
print(report_text(characterize(R)))
print("split decomposition:", [[str(x) for x in row] for row in split_decomposition(R)])

rng = random.Random(0)
tried = 0
while True:
    tried += 1
    n = rng.choice([4, 5])
    D = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            D[i][j] = D[j][i] = Fraction(rng.randint(1, 10))
    if not (is_metric(D) and is_kalmanson(D)):
        continue
    rep = characterize(D)
    if not rep.electrical:
        break

print(f"\nfound after {tried} draws a Kalmanson metric that no planar network produces:")
for row in D:
    print("   ", [int(x) for x in row])
print(report_text(rep))
print("certificate:", rep.witness())
