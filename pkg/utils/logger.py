"""
Logging setup shared by every module

Same handler layout for every logger: one StreamHandler (stderr) with
'time | name | level | message' lines, installed once per logger.
"""

import logging

LOG_FORMAT = '%(asctime)s | %(name)s | %(levelname)s | %(message)s'
DATE_FORMAT = '%H:%M:%S'

# Level applied to loggers created from now on (main.py may change it)
_default_level = logging.INFO


def get_logger(name: str) -> logging.Logger:
    """
    Get a configured logger

    Args:
        name: Logger name (class or module name)

    Returns:
        Logger with the project handler attached
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(_default_level)
        logger.propagate = False
    return logger


def set_level(level: int):
    """Apply a level to every project logger, present and future"""
    global _default_level
    _default_level = level
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.handlers and not logger.propagate:
            logger.setLevel(level)
