"""Chip-firing on a small multigraph: firing sets, Dhar's burning
algorithm and q-reduction.

Run with: python3 demos/01_chip_firing_basics.py
"""

from chiptree import dhar, fire_set, q_reduce
from chiptree.fixtures import example_divisor, example_graph


def main():
    g = example_graph()
    d = example_divisor(g)
    print(f"graph: {g.n} vertices, {g.num_edges} edges")
    print(f"start divisor: {d.format(g)}")

    # fire the support of the divisor: each vertex of the set sends one
    # chip along every edge leaving the set
    a = {g.vertex_index("a")}
    d1 = fire_set(g, d, a)
    print(f"after firing {{a}}: {d1.format(g)}")

    # Dhar's burning algorithm finds the maximal set that can fire
    # without touching the protected vertex q
    q = g.vertex_index("d")
    u = dhar(g, d1, q)
    print(f"maximal fireable set avoiding d: {{{g.set_name(u)}}}")

    # repeating that until nothing burns is q-reduction; the result is
    # the unique reduced representative of the divisor class at q
    reduced, script = q_reduce(g, d, q)
    print(f"d-reduced form of {d.format(g)}: {reduced.format(g)}")
    print("firing script:", " ".join(
        f"{g.vertex_name(v)}:{script[v]}" for v in range(g.n) if script[v]))


if __name__ == "__main__":
    main()
