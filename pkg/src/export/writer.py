"""
Writing reports, tables and Hasse documents to a file or stdout
"""
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from ..exceptions import UnknownFormatError


def to_json(document: Any) -> str:
    """Sorted keys and fixed indentation so equal documents are equal bytes"""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def table_to_text(df: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\n")
    if fmt == "text":
        return df.to_string(index=False) + "\n"
    if fmt == "json":
        return to_json(df.to_dict(orient="records"))
    raise UnknownFormatError(f"A table cannot be rendered as {fmt!r}")


class ReportWriter:
    def __init__(self, output: Optional[str] = None):
        self.output = Path(output) if output else None
        if self.output is not None:
            self.output.parent.mkdir(parents=True, exist_ok=True)

    def write_text(self, text: str) -> bool:
        """Write to the output path, or stdout when none is configured"""
        try:
            if self.output is None:
                sys.stdout.write(text)
                sys.stdout.flush()
            else:
                with open(self.output, 'w', encoding='utf-8', newline='\n') as f:
                    f.write(text)
                logging.info(f"Wrote {len(text)} characters to {self.output}")
            return True
        except Exception as e:
            logging.error(f"Error writing report to {self.output or 'stdout'}: {e}")
            return False

    def write_json(self, document: Any) -> bool:
        return self.write_text(to_json(document))
