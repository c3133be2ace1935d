"""Gale duality in action: graphs, double duals, unit summands.

For a connected multigraph the cycle-space and cut-space systems are
Gale dual to each other; dualizing twice returns the original system
with its unit summands stripped.  The tour walks through both facts on
small graphs and on the ten-form self-dual system.
"""

from unimod.catalog import make
from unimod.graphs import Multigraph, cographic_system, graphic_system
from unimod.systems import (
    are_isomorphic,
    complexity,
    direct_sum,
    gale_dual,
    split_upsilon,
)


def show_pair(name, g):
    cyc, cut = graphic_system(g), cographic_system(g)
    corr = are_isomorphic(gale_dual(cyc), cut)
    print(f"{name}: cycle rank {cyc.n}, cut rank {cut.n},"
          f" complexity {complexity(cyc)} == {complexity(cut)},"
          f" dual(cycle) ~ cut: {corr is not None}")


def main():
    show_pair("theta_3 (two vertices, three parallel edges)",
              make("theta", 3))
    show_pair("square cycle", make("cycle", 4))
    show_pair("K_4", make("complete", 4))

    # K_4 is the classical self-interchangeable example: its cycle and
    # cut systems are isomorphic to each other, not just dual.
    k4 = make("complete", 4)
    same = are_isomorphic(graphic_system(k4), cographic_system(k4))
    print(f"K_4 cycle system ~ K_4 cut system: {same is not None}")

    # the ten-form system is its own Gale dual
    b = make("bixby_seymour")
    corr = are_isomorphic(gale_dual(b), b)
    print(f"ten-form system self-dual: {corr is not None},"
          f" row map {list(corr.row_map)}")

    # padding with unit summands changes nothing after a double dual:
    # (dual of dual) recovers the unit-free core
    padded = direct_sum(make("upsilon", 2), b)
    dd = gale_dual(gale_dual(padded))
    split = split_upsilon(padded)
    print(f"padded system: {split.s} unit summands at rows"
          f" {list(split.unit_rows)}")
    print("double dual ~ core:",
          are_isomorphic(dd, split.core) is not None)

    # a path has only bridges, so its cut system is pure units and its
    # dual is empty
    path = Multigraph.build(3, [(1, 2), (2, 3)])
    cut = cographic_system(path)
    print(f"path cut system: N={cut.N}, dual is empty:"
          f" {gale_dual(cut).N == 0}")


if __name__ == "__main__":
    main()
