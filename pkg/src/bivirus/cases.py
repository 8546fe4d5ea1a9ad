"""Bundled two-node case studies.

Four systems sharing B1 = [[1.6, 1], [1, 1.6]] and unit recovery rates,
with B2 chosen to realize every qualitative regime a two-node bivirus
network admits:

  case1  a whole line of coexistence equilibria joining the two boundary
         equilibria (nongeneric construction),
  case2  two locally stable boundary equilibria separated by an unstable
         coexistence equilibrium (either virus can win),
  case3  two unstable boundary equilibria and a globally attractive
         coexistence equilibrium,
  case4  no coexistence; virus 2's boundary equilibrium attracts the
         whole interior.

Reference coordinates are rounded to three decimals, so comparisons
against them should use a tolerance no tighter than 5e-3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import BivirusSystem

B1_SHARED = np.array([[1.6, 1.0], [1.0, 1.6]])


@dataclass(frozen=True)
class CaseStudy:
    name: str
    B2: np.ndarray
    #: 3-decimal reference coordinates, keyed by equilibrium kind; the
    #: coexistence entry is None when no coexistence equilibrium exists.
    reference: dict
    #: expected spectrum classes keyed like `reference`
    expected_class: dict
    #: 'agree' | 'disagree' | 'line'
    sandwich: str
    line_of_equilibria: bool = False

    def system(self) -> BivirusSystem:
        eye = np.eye(2)
        return BivirusSystem(B1_SHARED, eye, self.B2, eye)


CASES = {
    "case1": CaseStudy(
        name="case1",
        B2=np.array([[2.1, 0.5], [1.5, 1.1]]),
        reference={
            "healthy": ([0.0, 0.0], [0.0, 0.0]),
            "boundary_virus1": ([0.615, 0.615], [0.0, 0.0]),
            "boundary_virus2": ([0.0, 0.0], [0.615, 0.615]),
            "coexistence": None,
        },
        expected_class={
            "healthy": "unstable",
            "boundary_virus1": "singular_boundary",
            "boundary_virus2": "singular_boundary",
        },
        sandwich="line",
        line_of_equilibria=True,
    ),
    "case2": CaseStudy(
        name="case2",
        B2=np.array([[2.1, 0.156], [3.0659, 1.1]]),
        reference={
            "healthy": ([0.0, 0.0], [0.0, 0.0]),
            "boundary_virus1": ([0.615, 0.615], [0.0, 0.0]),
            "boundary_virus2": ([0.0, 0.0], [0.565, 0.715]),
            "coexistence": ([0.344, 0.263], [0.233, 0.393]),
        },
        expected_class={
            "healthy": "unstable",
            "boundary_virus1": "stable",
            "boundary_virus2": "stable",
            "coexistence": "unstable",
        },
        sandwich="disagree",
    ),
    "case3": CaseStudy(
        name="case3",
        B2=np.array([[2.1, 1.143], [0.745, 1.1]]),
        reference={
            "healthy": ([0.0, 0.0], [0.0, 0.0]),
            "boundary_virus1": ([0.615, 0.615], [0.0, 0.0]),
            "boundary_virus2": ([0.0, 0.0], [0.665, 0.515]),
            "coexistence": ([0.462, 0.512], [0.168, 0.089]),
        },
        expected_class={
            "healthy": "unstable",
            "boundary_virus1": "unstable",
            "boundary_virus2": "unstable",
            "coexistence": "stable",
        },
        sandwich="agree",
    ),
    "case4": CaseStudy(
        name="case4",
        B2=np.array([[2.1, 0.885], [1.885, 1.1]]),
        reference={
            "healthy": ([0.0, 0.0], [0.0, 0.0]),
            "boundary_virus1": ([0.615, 0.615], [0.0, 0.0]),
            # B2 has constant row sums 2.985, so the endemic profile is
            # uniform: (1 - 1/2.985) * ones = 0.665 * ones.
            "boundary_virus2": ([0.0, 0.0], [0.665, 0.665]),
            "coexistence": None,
        },
        expected_class={
            "healthy": "unstable",
            "boundary_virus1": "unstable",
            "boundary_virus2": "stable",
        },
        sandwich="agree",
    ),
}

#: Eight interior starts for the case2 demonstration, chosen to straddle
#: the basin boundary (four on each side); artifact choices, each scalar
#: intensity pair applied to the all-ones profile.
DEMO_START_INTENSITIES = [
    (0.70, 0.10), (0.50, 0.20), (0.60, 0.30), (0.45, 0.25),
    (0.10, 0.70), (0.20, 0.50), (0.30, 0.60), (0.25, 0.45),
]


def demo_starts(n: int = 2):
    from .model import State
    ones = np.ones(n)
    return [State(a * ones, b * ones) for a, b in DEMO_START_INTENSITIES]
