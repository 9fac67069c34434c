"""Certified recognition: every verdict comes with a checkable witness.

Class membership is decided by searching for the forbidden induced
subgraphs; a non-member always gets a concrete witness tuple, and the
chordality test returns either a perfect elimination order or an induced
cycle.
"""

from perfcode import (
    class_membership,
    complement,
    cycle_graph,
    find_hole,
    find_odd_antihole,
    is_chordal,
    is_perfect_desk,
    path_graph,
    square,
    witness_is_valid,
)

for g, name in [
    (path_graph(7), "P7"),
    (cycle_graph(6), "C6"),
    (square(cycle_graph(6)), "C6 squared (the octahedron)"),
]:
    print(f"{name}:")
    for tag in ("P6-free", "(P6,HHD)-free", "(P6,house)-free", "chordal"):
        report = class_membership(g, tag)
        verdict = "member" if report.member else "NOT a member"
        extras = "".join(f"  {w}" for w in report.violations)
        print(f"  {tag:18} {verdict}{':' if extras else ''}{extras}")
        for w in report.violations:
            assert witness_is_valid(g, w)
    print()

octahedron = square(cycle_graph(6))
ok, order = is_chordal(path_graph(5))
print("P5 chordal with elimination order", order)
ok, witness = is_chordal(octahedron)
print("octahedron not chordal, witness", witness)

print("hole in C7:", find_hole(cycle_graph(7)))
anti = complement(cycle_graph(7))
print("odd antihole in the complement of C7:", find_odd_antihole(anti))
print("so that complement is imperfect:", is_perfect_desk(anti))
