"""
.. module:: units
   :platform: Linux, MacOS, Windows
   :synopsis: Information units for reported entropies

"""

import math
import typing as t

from ..serialization import Serializable

_FACTORS = {"nats": 1.0, "bits": 1.0 / math.log(2.0)}


class Unit(Serializable):
    """
    A unit of information. All computations are carried out in nats; a unit only
    rescales values when they are reported.

    Parameters
    ----------
    name
        Either ``"nats"`` or ``"bits"``.

    Example
    -------
    >>> import math
    >>> from entlab import units
    >>> round(units.bits.convert(math.log(8)), 12)
    3.0
    >>> units.Unit("nats").convert(0.5)
    0.5
    """

    def __init__(self, name: str) -> None:
        if name not in _FACTORS:
            raise ValueError(f"Unknown unit '{name}'. Use one of {sorted(_FACTORS)}.")
        self.name = name

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Unit) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __getstate__(self) -> t.Dict[str, str]:
        return {"name": self.name}

    def __setstate__(self, state: t.Dict[str, str]) -> None:
        self.__init__(state["name"])

    def getFactor(self) -> float:
        """
        Get the multiplicative factor that converts nats into this unit.
        """
        return _FACTORS[self.name]

    def convert(self, value: float) -> float:
        """
        Convert a value in nats into this unit.

        Parameters
        ----------
        value
            An entropic quantity in nats.
        """
        return value * self.getFactor()


Unit.registerTag("!entlab.Unit")


nats: Unit = Unit("nats")
bits: Unit = Unit("bits")


def convert_state(
    state: t.Any, unit: Unit, fields: t.Iterable[str]
) -> t.Any:
    """
    Convert the entropic fields of a state dictionary into a given unit.

    The conversion recurses into nested dictionaries and lists, so that the fields
    of embedded reports are converted as well. Non-numeric values are left
    untouched, as are fields not listed in ``fields``.

    Parameters
    ----------
    state
        A state dictionary, a list of them, or a plain value.
    unit
        The target unit.
    fields
        The names of the keys that hold entropic quantities.

    Returns
    -------
    t.Any
        A converted copy of ``state``.

    Example
    -------
    >>> import math
    >>> from entlab import units
    >>> state = {"lhs": math.log(2), "satisfied": True, "inner": [{"lhs": 0.0}]}
    >>> converted = units.convert_state(state, units.bits, ["lhs"])
    >>> round(converted["lhs"], 12), converted["satisfied"], converted["inner"]
    (1.0, True, [{'lhs': 0.0}])
    """
    fields = frozenset(fields)
    if unit == nats:
        return state
    if isinstance(state, list):
        return [convert_state(item, unit, fields) for item in state]
    if not isinstance(state, dict):
        return state
    converted = {}
    for key, value in state.items():
        if key in fields and isinstance(value, float):
            converted[key] = unit.convert(value)
        elif key in fields and isinstance(value, list):
            converted[key] = [
                unit.convert(v) if isinstance(v, float) else v for v in value
            ]
        else:
            converted[key] = convert_state(value, unit, fields)
    return converted
