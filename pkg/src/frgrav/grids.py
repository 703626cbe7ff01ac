"""Grids, fractional orders and sampled scalar fields.

Every scalar quantity in the engine is carried by a :class:`SampledField`:
values on a tensor-product grid over up to three chart coordinates
(x1, x2, v).  Each axis is a :class:`Grid1D` with strictly increasing nodes
and a lower terminal point from which all memory integrals start.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

AXIS_NAMES = ("x1", "x2", "v")


class DomainError(ValueError):
    """Argument outside the domain an operation is defined on."""


class ShapeError(ValueError):
    """Grid/array shapes do not line up."""


@dataclass(frozen=True)
class FracOrder:
    """Order alpha of the fractional calculus, restricted to (0, 1].

    ``terminals`` holds one lower terminal per coordinate axis; operations on
    sampled fields use the terminal stored on the axis grid, these are the
    defaults used when building grids.
    """

    alpha: float
    terminals: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        object.__setattr__(self, "terminals", tuple(float(t) for t in self.terminals))

    @property
    def is_integer(self) -> bool:
        return self.alpha == 1.0

    def terminal_for(self, axis: int) -> float:
        if axis < len(self.terminals):
            return self.terminals[axis]
        return 0.0


@dataclass(frozen=True)
class Grid1D:
    """Strictly increasing coordinate nodes plus the lower terminal."""

    nodes: np.ndarray
    terminal: float = 0.0

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ShapeError("Grid1D needs a 1-d array with at least two nodes")
        if not np.all(np.diff(nodes) > 0):
            raise DomainError("grid nodes must be strictly increasing")
        if self.terminal > nodes[0] + 1e-15:
            raise DomainError(
                f"terminal {self.terminal} exceeds first node {nodes[0]}"
            )
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "terminal", float(self.terminal))

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def span(self) -> tuple:
        return float(self.nodes[0]), float(self.nodes[-1])

    def key(self) -> tuple:
        """Hashable identity used to cache quadrature weights."""
        return (self.nodes.tobytes(), self.terminal)

    def refined(self, factor: int = 2) -> "Grid1D":
        """Insert ``factor - 1`` uniform subnodes per cell (node-aligned)."""
        if factor <= 1:
            return self
        segs = [
            np.linspace(a, b, factor, endpoint=False)
            for a, b in zip(self.nodes[:-1], self.nodes[1:])
        ]
        fine = np.concatenate(segs + [self.nodes[-1:]])
        return Grid1D(fine, self.terminal)


def uniform_grid(a: float, b: float, n: int, terminal: float | None = None) -> Grid1D:
    if terminal is None:
        terminal = a
    return Grid1D(np.linspace(a, b, n), terminal)


@dataclass(frozen=True)
class SampledField:
    """Scalar function sampled on a 1-3 axis tensor-product grid."""

    grids: tuple
    values: np.ndarray

    def __post_init__(self):
        grids = tuple(self.grids)
        values = np.asarray(self.values, dtype=float)
        if not 1 <= len(grids) <= 3:
            raise ShapeError("SampledField supports 1 to 3 axes")
        shape = tuple(g.n for g in grids)
        if values.shape != shape:
            raise ShapeError(f"value shape {values.shape} != grid shape {shape}")
        if not np.all(np.isfinite(values)):
            raise DomainError("field values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "grids", grids)
        object.__setattr__(self, "values", values)

    @property
    def ndim(self) -> int:
        return len(self.grids)

    @property
    def shape(self) -> tuple:
        return self.values.shape

    def with_values(self, values: np.ndarray) -> "SampledField":
        return SampledField(self.grids, values)

    def __add__(self, other):
        return self.with_values(self.values + _raw(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.with_values(self.values - _raw(other))

    def __rsub__(self, other):
        return self.with_values(_raw(other) - self.values)

    def __mul__(self, other):
        return self.with_values(self.values * _raw(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.with_values(self.values / _raw(other))

    def __neg__(self):
        return self.with_values(-self.values)


def _raw(x):
    return x.values if isinstance(x, SampledField) else x


def field_from_function(grids: Sequence[Grid1D], fn: Callable) -> SampledField:
    """Sample ``fn(axis0, axis1, ...)`` on the tensor-product grid."""
    grids = tuple(grids)
    mesh = np.meshgrid(*(g.nodes for g in grids), indexing="ij")
    vals = np.asarray(fn(*mesh), dtype=float)
    vals = np.broadcast_to(vals, tuple(g.n for g in grids)).copy()
    return SampledField(grids, vals)


def constant_field(grids: Sequence[Grid1D], value: float) -> SampledField:
    grids = tuple(grids)
    return SampledField(grids, np.full(tuple(g.n for g in grids), float(value)))


@dataclass(frozen=True)
class OneForm:
    """Coefficients omega_i of a fractional 1-form, one per axis."""

    comps: tuple

    def __post_init__(self):
        comps = tuple(self.comps)
        g0 = comps[0].grids
        for c in comps:
            if c.grids != g0:
                raise ShapeError("1-form components must share one grid")
        object.__setattr__(self, "comps", comps)

    @property
    def ndim(self) -> int:
        return len(self.comps)


@dataclass(frozen=True)
class TwoForm:
    """Antisymmetric pair coefficients omega_ij of a fractional 2-form."""

    comps: tuple  # nested tuple comps[i][j] of SampledField

    def __post_init__(self):
        comps = tuple(tuple(row) for row in self.comps)
        n = len(comps)
        for i in range(n):
            for j in range(n):
                if not np.array_equal(
                    comps[i][j].values, -comps[j][i].values
                ):
                    raise ShapeError("2-form coefficients must be antisymmetric")
        object.__setattr__(self, "comps", comps)

    @property
    def ndim(self) -> int:
        return len(self.comps)
