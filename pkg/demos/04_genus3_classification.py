"""
The genus 3 classification
==========================

Run the whole pipeline and print the five possible connected monodromy
groups with their realizability verdicts.
"""

import json

from kodaira_monodromy.report import classify

rep = classify(3)
for row in rep.rows:
    print(f"{row.shape:4s} {row.endomorphism_class:30s} {row.complexified_label:18s} gci={row.gci}")

# each row says why
print(json.dumps(rep.rows[3].to_dict(), indent=2, ensure_ascii=False))
for note in rep.footnotes:
    print("note:", note)

# genus 4 gets as far as the known Hodge groups allow
rep4 = classify(4)
print(sum(r.monodromy == "unresolved by paper" for r in rep4.rows), "of", len(rep4.rows), "rows unresolved")
