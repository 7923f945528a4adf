"""The main pipeline: a positive-rank divisor of degree k yields a
monotone search strategy for k+1 searchers, and the strategy's searcher
positions are the bags of a tree decomposition of width at most k.

Run with: python3 demos/02_divisor_to_decomposition.py
"""

from chiptree import (
    build_mss,
    has_positive_rank,
    mss_to_treedec,
    validate_treedec,
)
from chiptree.fixtures import example_divisor, example_graph
from chiptree.formats import write_td


def main():
    g = example_graph()
    d = example_divisor(g)
    print(f"divisor {d.format(g)} has positive rank:",
          has_positive_rank(g, d))

    trace = []
    tree = build_mss(g, d, trace=trace)
    print(f"\nstrategy tree: {len(tree.nodes)} positions, "
          f"{tree.searchers} searchers")
    for step, pos, detail in trace:
        line = f"  step {step} at ({pos.label(g)})"
        if step == "III":
            d2, u = detail
            line += f": fire {{{g.set_name(u)}}} from {d2.format(g)}"
        print(line)

    td = mss_to_treedec(g, tree)
    report = validate_treedec(g, td)
    print(f"\ndecomposition: {len(td.bags)} bags, width {report.width}, "
          f"valid: {report.ok}")
    print("\nPACE .td output:")
    print(write_td(td, g.n), end="")


if __name__ == "__main__":
    main()
