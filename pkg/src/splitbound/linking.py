"""Linking numbers, total linking and the parity of the splitting number."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix with zero diagonal.

    >>> from splitbound.diagram import parse_pd
    >>> linking_matrix(parse_pd("PD[X[4,2,1,3], X[2,4,3,1]]")).rows
    ((0, 1), (1, 0))
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def submatrix(self, keep) -> "LinkingMatrix":
        keep = sorted(keep)
        return LinkingMatrix(tuple(tuple(self.rows[i][j] for j in keep) for i in keep))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)


def linking_matrix(d: LinkDiagram) -> LinkingMatrix:
    """Half the signed count of crossings between each pair of components."""
    m = d.n_components
    twice = [[0] * m for _ in range(m)]
    for k, x in enumerate(d.crossings):
        i, j = d.strand_components(k)
        if i != j:
            twice[i][j] += x.sign
            twice[j][i] += x.sign
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if twice[i][j] % 2:
                raise ArithmeticError(f"odd crossing sum between components {i} and {j}")
            row.append(twice[i][j] // 2)
        rows.append(tuple(row))
    return LinkingMatrix(tuple(rows))


def total_linking(M: LinkingMatrix) -> int:
    """a(L): the sum of |lk| over unordered pairs of components."""
    return sum(abs(M[i, j]) for i in range(M.size) for j in range(i))


def parity_bound(M: LinkingMatrix) -> int:
    """Residue of the splitting number mod 2.

    Every crossing change between distinct components moves the total
    linking by exactly one, and a split link has total linking zero.
    """
    return total_linking(M) % 2
