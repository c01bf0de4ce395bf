"""
.. class:: SweepReporter
   :platform: Linux, MacOS, Windows
   :synopsis: Per-state slacks of an inequality sweep as delimited text

"""

import io
import typing as t

from . import serialization, units
from .sweep import SweepSummary


class SweepReporter:
    """
    Writes the slack of every inequality evaluated on every state of a sweep, one
    line per state.

    The first line is a header of quoted column names, prefixed with ``#``. The
    remaining lines hold the state index, its seed, its rank and the slacks,
    converted to the requested unit.

    Parameters
    ----------
    file
        The file to write to. This can be a file name or a file object.
    unit
        The unit of the reported slacks.
    separator
        The separator to use between columns.
    append
        If `True`, omit the header line and append to an existing file.

    Example
    -------
    >>> import io
    >>> from entlab import SweepReporter, sweep
    >>> summary = sweep.run_sweep([2, 2], count=2, seed=0, family="triangle")
    >>> stream = io.StringIO()
    >>> SweepReporter(stream).report(summary)
    >>> print(stream.getvalue().splitlines()[0])
    #"Index","Seed","Rank","triangle (nats)"
    """

    def __init__(
        self,
        file: t.Union[str, io.TextIOBase],
        unit: units.Unit = units.nats,
        separator: str = ",",
        append: bool = False,
    ) -> None:
        self._file = file
        self._unit = unit
        self._separator = separator
        self._append = append

    def _constructHeaders(self, summary: SweepSummary) -> t.List[str]:
        headers = ["Index", "Seed", "Rank"]
        names = summary.getInequalityNames()
        headers += [f"{name} ({self._unit.name})" for name in names]
        return headers

    def _constructReportValues(
        self, index: int, seed: int, rank: int, slacks: t.Dict[str, float]
    ) -> t.List[t.Any]:
        values: t.List[t.Any] = [index, seed, rank]
        values += [self._unit.convert(slack) for slack in slacks.values()]
        return values

    def _lines(self, summary: SweepSummary) -> t.Iterator[str]:
        if not self._append:
            headers = [f'"{header}"' for header in self._constructHeaders(summary)]
            yield "#" + self._separator.join(headers)
        for index, seed, rank, reports in summary.records:
            slacks = {report.name: report.slack for report in reports}
            values = self._constructReportValues(index, seed, rank, slacks)
            yield self._separator.join(repr(value) for value in values)

    def report(self, summary: SweepSummary) -> None:
        """
        Write the records of a sweep.

        Parameters
        ----------
        summary
            A summary returned by :func:`entlab.sweep.run_sweep`.
        """
        text = "".join(line + "\n" for line in self._lines(summary))
        if not isinstance(self._file, str):
            self._file.write(text)
        elif self._append:
            with open(self._file, "a", encoding="utf-8") as stream:
                stream.write(text)
        else:
            serialization.write_atomic(text, self._file)
