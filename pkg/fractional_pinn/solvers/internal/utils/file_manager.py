# Copyright 2026 The fractional-pinn Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This module provides methods that perform the store and retrieve operations on the
run artifacts: JSON documents (configs, checkpoints, summaries) and CSV tables.
"""

import csv
import fcntl
import json
import os
from typing import Iterable, List, Optional, Sequence, Tuple
from .logger import Logger


class FileManager:
    """FileManager to handle the run artifacts"""

    @classmethod
    def ensure_directory(cls, directory: str) -> bool:
        """Create the directory (and parents) when missing

        Args:
            directory: Directory path.
        """
        try:
            os.makedirs(directory, exist_ok=True)
            return True
        except OSError as err:
            Logger.error(err)
            return False

    @classmethod
    def store_json(cls, json_data: dict, file_path: str) -> bool:
        """Store the JSON document

        Args:
            json_data: Data to be stored.
            file_path: Destination path.
        """
        try:
            with open(file_path, 'w') as handle:
                fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
                json.dump(json_data, handle, indent=2)
                handle.write('\n')
                fcntl.flock(handle, fcntl.LOCK_UN)
                return True
        except (OSError, TypeError, ValueError) as err:
            Logger.error(err)
            return False

    @classmethod
    def read_json(cls, file_path: str) -> Optional[dict]:
        """
        Read a JSON document.

        Args:
            file_path: Source path.
        Returns:
            The decoded document, or None when it is missing or not valid JSON.
        """
        try:
            with open(file_path, 'r') as handle:
                fcntl.flock(handle, fcntl.LOCK_SH | fcntl.LOCK_NB)
                data = json.load(handle)
                fcntl.flock(handle, fcntl.LOCK_UN)
                return data
        except (OSError, ValueError) as err:
            Logger.debug(err)
            return None

    @classmethod
    def store_csv(cls, file_path: str, header: Sequence[str], rows: Iterable[Sequence]) -> bool:
        """Store a table with a header row and a fixed column order

        Args:
            file_path: Destination path.
            header: Column names.
            rows: Row values, each in header order.
        """
        try:
            with open(file_path, 'w', newline='') as handle:
                fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
                writer = csv.writer(handle, lineterminator='\n')
                writer.writerow(header)
                writer.writerows(rows)
                fcntl.flock(handle, fcntl.LOCK_UN)
                return True
        except OSError as err:
            Logger.error(err)
            return False

    @classmethod
    def append_csv_row(cls, file_path: str, header: Sequence[str], row: Sequence) -> bool:
        """Append one row, writing the header first when the file is new or empty

        Args:
            file_path: Destination path.
            header: Column names.
            row: Row values in header order.
        """
        try:
            with open(file_path, 'a', newline='') as handle:
                fcntl.flock(handle, fcntl.LOCK_EX)
                writer = csv.writer(handle, lineterminator='\n')
                if handle.tell() == 0:
                    writer.writerow(header)
                writer.writerow(row)
                fcntl.flock(handle, fcntl.LOCK_UN)
                return True
        except OSError as err:
            Logger.error(err)
            return False

    @classmethod
    def read_csv(cls, file_path: str) -> Optional[Tuple[List[str], List[List[str]]]]:
        """
        Read a table written by `store_csv`.

        Args:
            file_path: Source path.
        Returns:
            (header, rows) with raw string cells, or None when the file cannot be read.
        """
        try:
            with open(file_path, 'r', newline='') as handle:
                rows = list(csv.reader(handle))
        except OSError as err:
            Logger.debug(err)
            return None
        if not rows:
            return [], []
        return rows[0], rows[1:]
