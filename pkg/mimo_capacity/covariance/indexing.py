"""Row bookkeeping for eigenvalue multiplicities.

Row ``i`` (1-based) of the density and capacity matrices belongs to group
``e_i`` of the inverse-eigenvalue view and carries derivative order ``d_i``:

    m_1 + ... + m_{e_i - 1} < i <= m_1 + ... + m_{e_i}
    d_i = (m_1 + ... + m_{e_i}) - i
"""

from __future__ import annotations

from dataclasses import dataclass

from mimo_capacity.covariance.spec import CovarianceSpec


@dataclass(frozen=True, slots=True)
class MultiplicityIndex:
    """Group and derivative order of every row.

    Attributes:
        e: 1-based group index of each row
        d: Derivative order of each row; runs ``m_k - 1 .. 0`` inside group k
    """

    e: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.e)

    def group_slices(self) -> list[range]:
        """0-based row ranges of each group."""
        out: list[range] = []
        start = 0
        for i in range(1, self.n + 1):
            if i == self.n or self.e[i] != self.e[i - 1]:
                out.append(range(start, i))
                start = i
        return out


def multiplicity_index(multiplicities: tuple[int, ...] | list[int]) -> MultiplicityIndex:
    """Index maps for an ordered list of group multiplicities."""
    e: list[int] = []
    d: list[int] = []
    for group, mult in enumerate(multiplicities, start=1):
        e.extend([group] * mult)
        d.extend(range(mult - 1, -1, -1))
    return MultiplicityIndex(tuple(e), tuple(d))


def index_maps(spec: CovarianceSpec) -> MultiplicityIndex:
    """Index maps over the inverse-eigenvalue groups of ``spec``.

    Example:
        >>> from mimo_capacity.covariance.spec import from_groups
        >>> index_maps(from_groups([(0.5, 2), (2.0, 1)]))
        MultiplicityIndex(e=(1, 1, 2), d=(1, 0, 0))
    """
    return multiplicity_index(spec.mu_multiplicities)


__all__ = ["MultiplicityIndex", "multiplicity_index", "index_maps"]
