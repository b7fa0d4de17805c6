from __future__ import annotations

from typing import TYPE_CHECKING, Any, Protocol, cast

from attrs import define
from lark import Lark, Token, Transformer
from lark.exceptions import LarkError, VisitError

from omentangle.analysis import Axis
from omentangle.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    type AxisSpec = RangeSpec | tuple[float, ...]

__all__ = [
    "RangeSpec",
    "get_parser",
    "TreeToAxisSpec",
    "get_axis_parser",
    "AxisParser",
]

GRAMMAR_FILENAME = "grammar.lark"


@define(frozen=True)
class RangeSpec:
    start: float
    stop: float
    steps: int


def get_parser(*, parser: str = "lalr", debug: bool = False, strict: bool = False, **kwargs: Any) -> Lark:
    return Lark.open(
        GRAMMAR_FILENAME,
        rel_to=__file__,
        parser=parser,
        debug=debug,
        strict=strict,
        **kwargs,
    )


class TreeToAxisSpec(Transformer[Token, "AxisSpec"]):
    @staticmethod
    def number(tokens: list[Token]) -> float:
        assert len(tokens) == 1
        return float(tokens[0].value)

    @staticmethod
    def range(items: list[Any]) -> RangeSpec:
        start, stop, steps = items
        return RangeSpec(start, stop, int(steps.value))

    @staticmethod
    def values(items: list[float]) -> tuple[float, ...]:
        return tuple(items)


class AxisParser(Protocol):
    def __call__(self, text: str, name: str, *, scale: float = 1.0) -> Axis: ...


def get_axis_parser(**kwargs: Any) -> AxisParser:
    """Return a parser of axis specifications; *scale* multiplies every parsed value (e.g. ``math.pi``)."""
    parser = get_parser(start="axis", transformer=TreeToAxisSpec(), **kwargs)

    def _parse(text: str, name: str, *, scale: float = 1.0) -> Axis:
        try:
            spec = cast("AxisSpec", parser.parse(text))
        except VisitError as exc:
            raise InvalidArgumentError(f"Invalid axis {name!r}: {exc.orig_exc}") from exc
        except LarkError as exc:
            raise InvalidArgumentError(f"Invalid axis {name!r}: {text!r}") from exc

        match spec:
            case RangeSpec(start, stop, steps):
                axis = Axis.linspace(name, start, stop, steps)
            case _:
                axis = Axis(name, spec)
        return axis if scale == 1.0 else axis.scaled(scale)

    return _parse
