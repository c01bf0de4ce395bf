"""
.. module:: serialization
   :platform: Linux, MacOS, Windows
   :synopsis: YAML and JSON serialization of entlab objects

"""

import json
import os
import tempfile
import typing as t

import yaml


class Serializable(yaml.YAMLObject):
    """
    A mixin class that allows serialization and deserialization of objects with PyYAML.

    Subclasses define ``__getstate__`` and ``__setstate__``. The state dictionary is
    made of plain Python types only, so that it doubles as the JSON representation
    of the object.
    """

    @classmethod
    def registerTag(cls, tag: str) -> None:
        """
        Register a class for serialization and deserialization with PyYAML.

        Parameters
        ----------
        tag
            The YAML tag to be used for this class.
        """
        cls.yaml_tag = tag
        yaml.SafeDumper.add_representer(cls, cls.to_yaml)
        yaml.SafeLoader.add_constructor(tag, cls.from_yaml)

    @classmethod
    def fromDict(cls, state: t.Dict[str, t.Any]) -> t.Any:
        """
        Create an instance from its state dictionary.

        Parameters
        ----------
        state
            A dictionary such as the one returned by :meth:`toDict`.
        """
        obj = cls.__new__(cls)
        obj.__setstate__(state)
        return obj

    def toDict(self) -> t.Dict[str, t.Any]:
        """
        Return the state dictionary of this object.
        """
        return self.__getstate__()


def serialize(obj: t.Any, iostream: t.IO) -> None:
    """
    Serializes an entlab object as tagged YAML.

    Parameters
    ----------
    obj
        The entlab object to be serialized
    iostream
        A text stream in write mode

    Example
    =======
    >>> import io
    >>> import entlab
    >>> from entlab import serialization
    >>> iostream = io.StringIO()
    >>> serialization.serialize(entlab.units.bits, iostream)
    >>> print(iostream.getvalue())
    !entlab.Unit
    name: bits
    <BLANKLINE>
    """
    iostream.write(yaml.safe_dump(obj, sort_keys=False))


def deserialize(iostream: t.IO) -> t.Any:
    """
    Deserializes an entlab object from tagged YAML.

    Parameters
    ----------
    iostream
        A text stream in read mode containing the object to be deserialized

    Returns
    -------
    t.Any
        An instance of any entlab class

    Example
    -------
    >>> import io
    >>> import entlab
    >>> from entlab import serialization
    >>> iostream = io.StringIO()
    >>> serialization.serialize(entlab.units.bits, iostream)
    >>> iostream.seek(0)
    0
    >>> serialization.deserialize(iostream)
    Unit('bits')
    """
    return yaml.safe_load(iostream.read())


def write_atomic(text: str, path: t.Union[str, os.PathLike]) -> None:
    """
    Write UTF-8 text to a file, atomically.

    The text is written to a temporary file in the target directory, which then
    replaces the target. Readers never observe a partially written file.

    Parameters
    ----------
    text
        The content of the file
    path
        The destination file
    """
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as stream:
            stream.write(text)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise


def to_json(obj: t.Any) -> str:
    """
    Render an object as indented JSON text with a trailing newline.

    Parameters
    ----------
    obj
        A :class:`Serializable` object or a JSON-compatible value

    Example
    -------
    >>> import entlab
    >>> from entlab import serialization
    >>> print(serialization.to_json(entlab.units.bits), end="")
    {
      "name": "bits"
    }
    """
    data = obj.toDict() if isinstance(obj, Serializable) else obj
    return json.dumps(data, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def dump_json(obj: t.Any, path: t.Union[str, os.PathLike]) -> None:
    """
    Write an object as UTF-8 JSON, atomically (see :func:`write_atomic`).

    Parameters
    ----------
    obj
        A :class:`Serializable` object or a JSON-compatible value
    path
        The destination file
    """
    write_atomic(to_json(obj), path)


def load_json(
    path: t.Union[str, os.PathLike], cls: t.Optional[t.Type[Serializable]] = None
) -> t.Any:
    """
    Read a UTF-8 JSON file.

    Parameters
    ----------
    path
        The file to read
    cls
        If given, the :class:`Serializable` subclass to build from the parsed data

    Returns
    -------
    t.Any
        An instance of ``cls`` or the parsed JSON value
    """
    with open(path, "r", encoding="utf-8") as stream:
        data = json.load(stream)
    return data if cls is None else cls.fromDict(data)
