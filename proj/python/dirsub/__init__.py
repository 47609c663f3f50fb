# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Directional DR-submodular maximization over lattices.

Objectives and lattices are given as dicts (or JSON text) in the same
formats the command-line tool reads; reports come back as dicts.
"""

import json

import numpy as np

from . import _dirsub
from ._dirsub import (
    DegenerateInputError,
    ResourceError,
    UsageError,
    ValidationError,
)

__all__ = [
    "DegenerateInputError",
    "ResourceError",
    "UsageError",
    "ValidationError",
    "appendix",
    "double_greedy",
    "gap",
    "generate_mixture",
    "greedy",
    "knapsack",
    "lattice",
    "lattice_coherence",
    "objective_value",
    "oracle",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def _solve(algorithm, objective, lattice, **kw):
    lat = None if lattice is None else _text(lattice)
    return json.loads(_dirsub.solve(algorithm, _text(objective), lat, **kw))


def greedy(objective, k, lattice=None, **kw):
    """Greedy under a height bound k."""
    return _solve("greedy", objective, lattice, k=k, **kw)


def knapsack(objective, budget, lattice=None, **kw):
    """Density greedy under the height cost with the given budget."""
    return _solve("knapsack", objective, lattice, budget=budget, **kw)


def double_greedy(objective, lattice=None, **kw):
    return _solve("double-greedy", objective, lattice, **kw)


def oracle(objective, lattice, k=None):
    return json.loads(_dirsub.oracle(_text(objective), _text(lattice), k))


def gap(objective, lattice, direction="strong"):
    return json.loads(_dirsub.gap(_text(objective), _text(lattice), direction))


def lattice(spec):
    """Elements, Hasse edges and structural flags of a lattice."""
    return json.loads(_dirsub.lattice_json(_text(spec)))


def objective_value(objective, basis):
    """Objective value of the span of the rows of `basis`."""
    b = np.asarray(basis, dtype=float)
    if b.ndim == 1:
        b = b.reshape(1, -1) if b.size else np.zeros((0, 0))
    return _dirsub.objective_value(_text(objective), b)


def generate_mixture(q=0.95, n=1000, seed=0):
    """n x 3 array of samples from the two-component Gaussian mixture."""
    return _dirsub.generate_mixture(q, n, seed)


def appendix(seed=0, n=1000, strategy="grid", grid_width=0.025):
    return json.loads(_dirsub.appendix(seed, n, strategy, grid_width))


def lattice_coherence(vectors):
    """Coherence of the lattice spanned by the rows of `vectors`."""
    return _dirsub.lattice_coherence(np.asarray(vectors, dtype=float))
