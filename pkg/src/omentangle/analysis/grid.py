from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Self

import numpy as np
from attrs import define, field, validators

from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    import numpy.typing as npt

    from omentangle.math import Vector

__all__ = [
    "Axis",
    "ScanGrid",
]


def _as_values(values: Iterable[float]) -> tuple[float, ...]:
    return tuple(float(value) for value in values)


def _check_values(_instance: Axis, _attribute: object, values: tuple[float, ...]) -> None:
    if not values:
        raise InvalidArgumentError("An axis needs at least one value")
    if not np.all(np.isfinite(values)):
        raise InvalidArgumentError(f"Axis values must be finite, got {values}")


@define(frozen=True)
class Axis:
    """A named, ordered set of sample points."""

    name: str = field(validator=validators.min_len(1))
    values: tuple[float, ...] = field(converter=_as_values, validator=_check_values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    @property
    def start(self) -> float:
        return self.values[0]

    @property
    def stop(self) -> float:
        return self.values[-1]

    @property
    def steps(self) -> int:
        return len(self.values)

    def scaled(self, factor: float) -> Self:
        return type(self)(self.name, (value * factor for value in self.values))

    @classmethod
    def linspace(cls, name: str, start: float, stop: float, steps: int) -> Self:
        if steps < 1:
            raise InvalidArgumentError(f"Axis {name!r} needs at least one step, got {steps}")
        return cls(name, np.linspace(start, stop, steps).tolist())


def _as_grid(values: npt.ArrayLike) -> npt.NDArray[np.float64]:
    return np.array(values, dtype=np.float64)


@define(frozen=True, eq=False)
class ScanGrid:
    """Logarithmic negativity (in bits) at every point of the product of *axes*, in row-major order.

    *curves* holds optional per-point profiles along the first axis, such as the squeezing that
    symmetrizes the light or the one that maximizes entanglement.
    """

    axes: tuple[Axis, ...]
    values: npt.NDArray[np.float64] = field(converter=_as_grid)
    curves: dict[str, Vector] = field(factory=dict)

    def __attrs_post_init__(self) -> None:
        shape = tuple(len(axis) for axis in self.axes)
        if self.values.shape != shape:
            raise InvalidArgumentError(f"Values of shape {self.values.shape} do not match axes {shape}")
        if np.any(self.values < 0.0):
            raise InvalidArgumentError("Logarithmic negativity cannot be negative")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(axis.name for axis in self.axes)

    def argmax(self) -> tuple[tuple[float, ...], float]:
        """Coordinates and value of the largest cell, the first one in row-major order on ties."""
        flat = int(np.argmax(self.values))
        index = np.unravel_index(flat, self.values.shape)
        coords = tuple(axis.values[int(i)] for axis, i in zip(self.axes, index, strict=True))
        return coords, float(self.values.flat[flat])

    def rows(self) -> Iterator[tuple[float, ...]]:
        """Yield ``(*coordinates, value)`` for every cell in row-major order."""
        for point, value in zip(itertools.product(*self.axes), self.values.flat, strict=True):
            yield (*point, float(value))
