"""
Contains the :class:`base class <qsdesign.storages.ReportStorage>` for
report storages and implementations.
"""

import io
import os
from abc import ABC, abstractmethod
from typing import Optional

from .report import EliminationReport

__all__ = ('ReportStorage', 'JSONLinesStorage')


def touch(path: str, create_dirs: bool):
    """
    Create a file if it doesn't exist yet.

    :param path: The file to create.
    :param create_dirs: Whether to create all missing parent directories.
    """
    if create_dirs:
        base_dir = os.path.dirname(path)
        if base_dir and not os.path.exists(base_dir):
            os.makedirs(base_dir)

    with open(path, 'a'):
        pass


class ReportStorage(ABC):
    """
    The abstract base class for all report storages.

    A storage (de)serializes an :class:`EliminationReport` and keeps it
    somewhere (a file on disk, ...).
    """

    @abstractmethod
    def read(self) -> Optional[EliminationReport]:
        """
        Read the stored report.

        Return ``None`` here to indicate that the storage is empty.
        """

        raise NotImplementedError('To be overridden!')

    @abstractmethod
    def write(self, report: EliminationReport) -> None:
        """
        Replace the stored report.

        :param report: The report to store.
        """

        raise NotImplementedError('To be overridden!')

    def close(self) -> None:
        """
        Optional: Close open file handles, etc.
        """

        pass

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()


class JSONLinesStorage(ReportStorage):
    """
    Store the report as JSON lines, one entry per line.
    """

    def __init__(self, path: str, create_dirs: bool = False,
                 access_mode: str = 'r+'):
        """
        Create a new instance.

        Also creates the file if it doesn't exist and the access mode is
        appropriate for writing.

        :param path: Where to store the report.
        :param access_mode: mode in which the file is opened (r, r+)
        """

        super().__init__()

        if access_mode not in ('r', 'r+'):
            raise ValueError('access mode must be "r" or "r+", not "{}"'
                             .format(access_mode))
        self._mode = access_mode

        if '+' in access_mode:
            touch(path, create_dirs=create_dirs)

        self._handle = open(path, mode=access_mode, encoding='utf-8')

    def close(self) -> None:
        self._handle.close()

    def read(self) -> Optional[EliminationReport]:
        self._handle.seek(0, os.SEEK_END)
        if not self._handle.tell():
            return None

        self._handle.seek(0)
        return EliminationReport.from_jsonl(self._handle.read())

    def write(self, report: EliminationReport) -> None:
        self._handle.seek(0)

        try:
            self._handle.write(report.to_jsonl())
        except io.UnsupportedOperation:
            raise IOError('Cannot write the report. Access mode is "{0}"'
                          .format(self._mode))

        self._handle.flush()
        os.fsync(self._handle.fileno())

        # The new report may be shorter than the old one
        self._handle.truncate()
