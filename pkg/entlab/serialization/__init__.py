"""
Serialization subpackage of entlab

"""

from .serialization import (  # noqa: F401
    Serializable,
    deserialize,
    dump_json,
    load_json,
    serialize,
    to_json,
    write_atomic,
)
