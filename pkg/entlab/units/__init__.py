"""
Units submodule of entlab

"""

from .units import Unit, bits, convert_state, nats  # noqa: F401
