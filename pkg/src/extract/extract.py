"""
Reading involutions from the command line and from files
"""
import json
import logging
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd

from ..coxeter.signed_permutation import Involution, Permutation, parse_window
from ..exceptions import NotAnInvolutionError, RankMismatchError, UnknownFormatError

Element = Union[Involution, Permutation]


class InvolutionReader:
    def __init__(self, mode: str = "C", n: Optional[int] = None, base_path: Optional[str] = None):
        self.mode = mode
        self.n = n
        self.base_path = Path(base_path) if base_path else Path.cwd()
        self.supported_formats = ['.json', '.csv']

    def parse(self, text: str) -> Element:
        """Window notation '[2,-1,3]' for type C, one-line '[2,1,3]' for type A"""
        images = parse_window(text)
        if self.n is not None and len(images) != self.n:
            raise RankMismatchError(f"{text} has {len(images)} entries, expected n={self.n}")
        if self.mode == "A":
            perm = Permutation(len(images), images)
            if not perm.is_involution():
                raise NotAnInvolutionError(f"{perm.window()} squared is not the identity")
            return perm
        return Involution(len(images), images)

    def validate_path(self, file_path: Path) -> bool:
        if not file_path.exists():
            logging.error(f"File not found: {file_path}")
            return False
        if not file_path.is_file():
            logging.error(f"Not a file: {file_path}")
            return False
        if file_path.suffix.lower() not in self.supported_formats:
            logging.error(f"Unsupported file format: {file_path.suffix}")
            return False
        return True

    def _read_json(self, path: Path) -> List[Element]:
        with open(path, 'r') as f:
            data = json.load(f)
        if isinstance(data, dict):
            data = data.get('involutions', data.get('elements', []))
        texts = []
        for item in data:
            if isinstance(item, str):
                texts.append(item)
            elif isinstance(item, dict) and 'window' in item:
                texts.append(item['window'])
            elif isinstance(item, dict):
                texts.append("[" + ",".join(str(x) for x in item['images']) + "]")
            else:
                texts.append("[" + ",".join(str(x) for x in item) + "]")
        return [self.parse(t) for t in texts]

    def _read_csv(self, path: Path) -> List[Element]:
        df = pd.read_csv(path, dtype=str)
        df.columns = df.columns.str.strip().str.lower()
        if 'window' not in df.columns:
            raise UnknownFormatError(f"{path} has no 'window' column; found {df.columns.tolist()}")
        return [self.parse(t) for t in df['window'].dropna()]

    def read_file(self, file_path: str) -> List[Element]:
        """Involutions listed in a .json or .csv file (e.g. an earlier enumerate output)"""
        path = self.base_path / file_path
        if not self.validate_path(path):
            raise FileNotFoundError(f"Cannot read involutions from {file_path}")
        if path.suffix.lower() == '.json':
            elements = self._read_json(path)
        else:
            elements = self._read_csv(path)
        logging.info(f"Read {len(elements)} involutions from {file_path}")
        return elements
