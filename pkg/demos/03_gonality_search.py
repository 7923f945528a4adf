"""Brute-force divisorial gonality: the smallest degree of an effective
divisor with positive rank. Positive rank means that for every vertex q
the q-reduced form places a chip on q.

Run with: python3 demos/03_gonality_search.py
"""

from chiptree import dgon_bruteforce
from chiptree.fixtures import banana_graph, cycle_graph, example_graph, path_graph


def show(name, g, max_degree):
    result = dgon_bruteforce(g, max_degree)
    if result is None:
        print(f"{name}: no positive-rank divisor up to degree {max_degree}")
    else:
        print(f"{name}: gonality {result.value}, "
              f"witness {result.witness.format(g)}")


def main():
    show("path P5", path_graph(5), 3)
    show("cycle C5", cycle_graph(5), 3)
    # multiplicities do not raise divisorial gonality here: one chip on
    # each of the two vertices already has positive rank
    show("double edge", banana_graph(2), 3)
    show("quadruple edge", banana_graph(4), 5)
    show("7-vertex example", example_graph(), 4)


if __name__ == "__main__":
    main()
