"""
Endomorphism classes and their domains
======================================

List the possible endomorphism algebras of a simple 6-dimensional weight-1
Hodge structure, then the Hermitian symmetric domain each one moves in.
"""

from kodaira_monodromy.albert import AlbertType, enumerate_albert_classes, enumerate_signatures
from kodaira_monodromy.domains import domain_spec

# genus 3 fibres give a 6-dimensional rational Hodge structure, so n = 3
classes = enumerate_albert_classes(3)
for c in classes:
    print(c)

# Type I classes have one domain; Type IV classes need a signature per
# complex embedding pair
for c in classes:
    sigs = enumerate_signatures(c) if c.albert_type is AlbertType.IV else [None]
    for sig in sigs:
        spec = domain_spec(c, sig)
        tag = "" if sig is None else f" sig {sig}"
        print(f"{c.description:28s}{tag:18s} {spec.label:24s} dim {spec.total_dimension}")

# the class count grows slowly with n
for n in range(1, 9):
    print(n, len(enumerate_albert_classes(n)))
