#!/usr/bin/env python3
"""Draw a gallery of instructive meander graphs as ASCII art.

Covers a parabolic (all central arcs on one side), a reduction starting
point, an index-1 graph with mirror-swapped segment twins, and the two
flavours of index-0 graph at rank 7.

Usage:
  python3 scripts/draw_examples.py
"""

from meandre import analyze, build_graph_c, document, index_c, make_seaweed_c, to_ascii

GALLERY = [
    ("parabolic of sp(14)", make_seaweed_c(7, "2,3", "")),
    ("reduction start in sp(20)", make_seaweed_c(10, "3,3", "4,5")),
    ("index 1 in sp(16)", make_seaweed_c(8, "3,4", "5,3")),
    ("Frobenius in sp(14), one central arc", make_seaweed_c(7, "2,4", "4,3")),
    ("Frobenius in sp(14), two central arcs", make_seaweed_c(7, "3,2", "2,5")),
]


def main() -> None:
    for label, q in GALLERY:
        report = analyze(build_graph_c(q))
        print(f"== {label}: {q}  [{q.algebra_name}]")
        print(
            f"   index {index_c(q)}; {report.cycles} cycles, "
            f"{report.segments} segments "
            f"({report.sigma_stable_segments} mirror-stable)"
        )
        print(to_ascii(document(q)))
        print()


if __name__ == "__main__":
    main()
