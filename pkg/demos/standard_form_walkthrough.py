"""Standardizing an integer matrix and reading verification failures.

Starts from a 0/1 presentation whose maximal minors are all 0 or +-2,
so no row subset can serve as-is; the standardization step re-expands
every row over the first maximal independent subset with exact integer
division.  Then breaks a matrix on purpose to show the witness minor.
"""

from unimod.errors import NotUnimodularError
from unimod.fileio import render_matrix_text
from unimod.systems import complexity, from_matrix

TEN_FORMS = [
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 0, 1, 0, 1],
    [1, 0, 0, 1, 0],
    [0, 1, 0, 0, 1],
]


def main():
    system = from_matrix(TEN_FORMS)
    print("standard form (rows re-expanded over rows"
          f" {list(system.base_rows)}):")
    print(render_matrix_text(system.a_matrix.to_lists()))
    print(f"complexity (number of bases): {complexity(system)}")

    # two unit rows plus the two diagonals of the square: the diagonal
    # pair spans a sublattice of index 2, so verification must fail
    broken = [[1, 0], [0, 1], [1, 1], [1, -1]]
    try:
        from_matrix(broken)
    except NotUnimodularError as exc:
        w = exc.witness()
        print(f"rejected: {exc}")
        print(f"witness minor: rows {w['rows']} cols {w['cols']}"
              f" determinant {w['value']}")


if __name__ == "__main__":
    main()
