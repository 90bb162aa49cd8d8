import typing
from dataclasses import dataclass
from fractions import Fraction

from qlatk.exception_factory import QLATKError, SingularSystemError

Number = typing.Union[int, Fraction]


@dataclass(frozen=True)
class LinearSystem:
    matrix: typing.Sequence[typing.Sequence[Number]]
    rhs: typing.Sequence[Number]

    def __post_init__(self):
        size = len(self.rhs)
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise QLATKError(f"linear system is not square of size {size}")


def solve_linear(system: LinearSystem) -> typing.List[Fraction]:
    """ Exact solution by fraction-free (Bareiss) elimination on the augmented matrix """
    size = len(system.rhs)
    rows = [
        [Fraction(value) for value in row] + [Fraction(system.rhs[i])]
        for i, row in enumerate(system.matrix)
    ]
    previous = Fraction(1)
    for k in range(size):
        pivot = next((i for i in range(k, size) if rows[i][k] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"matrix of size {size} is singular (column {k})")
        rows[k], rows[pivot] = rows[pivot], rows[k]
        for i in range(k + 1, size):
            factor = rows[i][k]
            for j in range(k + 1, size + 1):
                rows[i][j] = (rows[k][k] * rows[i][j] - factor * rows[k][j]) / previous
            rows[i][k] = Fraction(0)
        previous = rows[k][k]

    solution = [Fraction(0)] * size
    for i in reversed(range(size)):
        accumulated = rows[i][size] - sum(
            (rows[i][j] * solution[j] for j in range(i + 1, size)), Fraction(0)
        )
        solution[i] = accumulated / rows[i][i]
    return solution


def solve(
    matrix: typing.Sequence[typing.Sequence[Number]], rhs: typing.Sequence[Number]
) -> typing.List[Fraction]:
    return solve_linear(LinearSystem(matrix, rhs))
