#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
记录导出 - 以 CSV（默认）或 JSON lines 输出命令结果，另有轨迹与副本明细的 CSV 文件导出
"""

import csv
import json
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterable, Iterator, List, Optional, TextIO

from infrastructure.logging.logger import getLogger
from infrastructure.utils.helpers import FileHelper, FormatHelper

FORMATS = ('csv', 'json')


class RecordWriter:
    """按行写出记录

    同一个写入器的所有行共用第一行的列名。
    """

    def __init__(self, stream: TextIO, outputFormat: str = 'csv', decimals: int = 7,
                 truncate: bool = False):
        if outputFormat not in FORMATS:
            raise ValueError(f"不支持的输出格式: {outputFormat!r}")
        self.stream = stream
        self.outputFormat = outputFormat
        self.decimals = decimals
        self.truncate = truncate
        self._csvWriter: Optional[csv.DictWriter] = None
        self.rowsWritten = 0

    @classmethod
    @contextmanager
    def open(cls, path: Optional[str] = None, outputFormat: str = 'csv',
             decimals: int = 7, truncate: bool = False) -> Iterator['RecordWriter']:
        """打开写入器，path 为空时写到标准输出；truncate 时数值向零截断"""
        if not path or path == '-':
            yield cls(sys.stdout, outputFormat, decimals, truncate)
            return

        FileHelper.ensureParent(path)
        with open(path, 'w', encoding='utf-8', newline='') as stream:
            yield cls(stream, outputFormat, decimals, truncate)
        getLogger('record_writer').info(f"已写出 {path}")

    def _jsonValue(self, value: Any) -> Any:
        if isinstance(value, bool):
            return value
        if isinstance(value, float):
            text = FormatHelper.formatFloat(value, self.decimals, self.truncate)
            return text if text in ('inf', '-inf') else float(text)
        return value

    def writeRow(self, row: Dict[str, Any]):
        """写出一行"""
        if self.outputFormat == 'json':
            record = {key: self._jsonValue(value) for key, value in row.items()}
            self.stream.write(json.dumps(record, ensure_ascii=False) + '\n')
        else:
            if self._csvWriter is None:
                self._csvWriter = csv.DictWriter(
                    self.stream, fieldnames=list(row.keys()), lineterminator='\n'
                )
                self._csvWriter.writeheader()
            self._csvWriter.writerow(FormatHelper.formatRow(row, self.decimals, self.truncate))
        self.rowsWritten += 1

    def writeRows(self, rows: Iterable[Dict[str, Any]]) -> int:
        """写出多行

        Returns:
            int: 写出的行数
        """
        count = 0
        for row in rows:
            self.writeRow(row)
            count += 1
        return count


def writeCsvFile(path: str, rows: List[Dict[str, Any]], decimals: int = 7) -> int:
    """把明细行写成 CSV 文件（耦合轨迹、副本结果）

    Returns:
        int: 写出的行数
    """
    with RecordWriter.open(path, 'csv', decimals) as writer:
        return writer.writeRows(rows)


def readCsvFile(path: str) -> List[Dict[str, str]]:
    """读回 CSV 文件，值保持为字符串"""
    with open(path, 'r', encoding='utf-8', newline='') as stream:
        return list(csv.DictReader(stream))
