"""
Logging configuration for coxhurwitz.

Provides easy setup of file and console logging with rotation.
"""

import logging
import logging.handlers
from pathlib import Path
import sys
from typing import Optional

HANDLER_TAG = "_coxhurwitz_handler"


def _formatter() -> logging.Formatter:
    return logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )


def _file_handler(log_file: Path, level: int) -> logging.Handler:
    """Rotating file handler (10 MB, 5 backups)."""
    log_file = Path(log_file)
    log_file.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.handlers.RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5)
    handler.setLevel(level)
    handler.setFormatter(_formatter())
    setattr(handler, HANDLER_TAG, True)
    return handler


def setup_logger(
    name: str = "coxhurwitz",
    log_file: Optional[Path] = None,
    level: int = logging.INFO,
    console: bool = True
) -> logging.Logger:
    """
    Set up a logger with file and/or console handlers.
    
    Args:
        name: Logger name
        log_file: Path to log file (None disables file logging)
        level: Logging level (default: INFO)
        console: Whether to add a console handler (writes to stderr)
        
    Returns:
        Configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    
    # Reconfigure our own handlers instead of stacking new ones; console
    # handlers follow the current sys.stderr (test runners swap it).
    own = [h for h in logger.handlers if getattr(h, HANDLER_TAG, False)]
    if own:
        for handler in own:
            handler.setLevel(level)
            if not isinstance(handler, logging.FileHandler):
                handler.setStream(sys.stderr)
        if log_file is not None and not any(isinstance(h, logging.FileHandler) for h in own):
            logger.addHandler(_file_handler(log_file, level))
        return logger
    
    if console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(_formatter())
        setattr(console_handler, HANDLER_TAG, True)
        logger.addHandler(console_handler)
    
    if log_file is not None:
        logger.addHandler(_file_handler(log_file, level))
    
    return logger
