from __future__ import annotations

from typing import TYPE_CHECKING, Self

from attrs import define, field, validators

from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

__all__ = [
    "ModeRegistry",
    "ModeRef",
]

type ModeRef = int | str


def _standardize_labels(raw: Iterable[object]) -> tuple[str, ...]:
    return tuple(str(label) for label in raw)


def _unique(_instance: object, _attribute: object, labels: tuple[str, ...]) -> None:
    if len(set(labels)) != len(labels):
        raise InvalidArgumentError(f"Mode labels must be unique: {labels}")


@define(frozen=True, order=False, hash=True)
class ModeRegistry:
    """Ordered labels of the modes of a Gaussian state.

    Position in the registry is the mode index, so mode ``k`` owns quadrature rows ``2k`` and ``2k + 1``.
    """

    labels: tuple[str, ...] = field(
        converter=_standardize_labels,
        validator=validators.and_(
            validators.deep_iterable(validators.instance_of(str)),
            _unique,
        ),
    )

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def __str__(self) -> str:
        return "⊗".join(self.labels)

    def index(self, mode: ModeRef) -> int:
        if isinstance(mode, str):
            try:
                return self.labels.index(mode)
            except ValueError:
                raise InvalidArgumentError(f"Unknown mode {mode!r}, registry is {self}") from None
        if not 0 <= mode < len(self):
            raise InvalidArgumentError(f"Mode index {mode} out of range for {len(self)} modes")
        return mode

    def indices(self, modes: Iterable[ModeRef]) -> list[int]:
        return [self.index(mode) for mode in modes]

    def without(self, mode: ModeRef) -> Self:
        idx = self.index(mode)
        return type(self)(self.labels[:idx] + self.labels[idx + 1 :])

    def restrict(self, modes: Iterable[int]) -> Self:
        return type(self)(self.labels[idx] for idx in modes)

    def concat(self, other: ModeRegistry) -> Self:
        labels = self.labels + other.labels
        if len(set(labels)) != len(labels):
            # Clashing labels are made unique by position.
            labels = tuple(f"{label}{idx}" for idx, label in enumerate(labels))
        return type(self)(labels)

    @classmethod
    def default(cls, n_modes: int) -> Self:
        if n_modes < 1:
            raise InvalidArgumentError(f"Expected n_modes >= 1, got {n_modes}")
        return cls(str(idx) for idx in range(n_modes))
