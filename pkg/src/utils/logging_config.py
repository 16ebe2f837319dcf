"""
Logging configuration: one file handler and one console handler on the root logger
"""
import logging
from pathlib import Path
from typing import Optional, Union

LOG_FILE_NAME = "borbits.log"


def setup_logging(log_dir: Optional[str] = None, level: Union[int, str] = logging.INFO) -> Path:
    """Configure logging with file and console handlers; returns the log file path"""
    log_path = Path(log_dir) if log_dir else Path("logs")
    log_path.mkdir(parents=True, exist_ok=True)
    log_file = log_path / LOG_FILE_NAME

    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO

    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler()
        ],
        force=True,
    )
    return log_file
