"""
Logging configuration for the command line front end.
"""

import logging
from pathlib import Path
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> Optional[Path]:
    """Set up logging to stderr and, optionally, a file.

    Args:
        level: Level name such as INFO or DEBUG
        log_file: Optional path of a log file; parent directories are created

    Returns:
        The log file path, or None when logging only to stderr
    """
    handlers = [logging.StreamHandler()]
    path = None
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    # pandas may pull in numexpr, which logs its thread setup at INFO
    logging.getLogger("numexpr").setLevel(logging.WARNING)

    if path is not None:
        logging.info(f"Logging to file: {path}")
    return path
