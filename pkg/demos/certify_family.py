"""Certify a family of transversally non-simple closed 3-braids.

Each admissible parameter triple (p, q, r) yields two 3-braid words
that close to the same knot with the same self-linking number yet are
not conjugate, and a flype obstruction shows no transversal isotopy
connects them.  certify() runs every check; sweep() covers a box of
triples.
"""

from braidcalc.certify import FamilyParams, certify, report_to_json, sweep

report = certify(FamilyParams(2, 4, 3))
print("words:")
print("  ", report.tx_plus)
print("  ", report.tx_minus)
print("verdict:", report.verdict)
print()
print(report_to_json(report))
print()

# the q = p + 1 diagonal is excluded for a reason: there the two words
# become conjugate, so no obstruction can exist
bad = certify(FamilyParams(2, 3, 4))
print("inadmissible triple (2, 3, 4):", bad.verdict)
print()

reports = sweep(6, 6, 6)
certified = sum(1 for r in reports if r.certified)
print(f"sweep over 2..6 cubed: {certified}/{len(reports)} admissible triples certified")
for r in reports[:5]:
    t = r.params
    print(f"  p={t.p} q={t.q} r={t.r}  beta={r.checks.beta_plus}  {r.verdict}")
print("  ...")
