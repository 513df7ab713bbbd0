#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Logging configuration: rotating files plus a rich console on stderr
"""

import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from config import get_config

_configured_dir: Optional[str] = None


def setup_logging(log_dir: Optional[str] = None, level: Optional[str] = None, console: Optional[bool] = None) -> str:
    """Configure the root and `rewrites` loggers once; later calls only adjust the level"""
    global _configured_dir

    cfg = get_config().logging
    level = (level or cfg.level).upper()
    root_logger = logging.getLogger()

    if _configured_dir is not None:
        root_logger.setLevel(level)
        return _configured_dir

    log_dir = log_dir or cfg.log_dir
    os.makedirs(log_dir, exist_ok=True)

    # Main log file (all messages)
    main_handler = RotatingFileHandler(
        os.path.join(log_dir, "revsynth.log"),
        maxBytes=cfg.max_bytes,
        backupCount=cfg.backup_count,
        encoding="utf-8",
    )
    main_handler.setLevel(logging.INFO)
    main_handler.setFormatter(logging.Formatter(
        '%(asctime)s [%(levelname)s] %(name)s: %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))

    # Error log file (errors only)
    error_handler = RotatingFileHandler(
        os.path.join(log_dir, "errors.log"),
        maxBytes=cfg.max_bytes // 2,
        backupCount=cfg.backup_count,
        encoding="utf-8",
    )
    error_handler.setLevel(logging.ERROR)
    error_handler.setFormatter(logging.Formatter(
        '%(asctime)s [%(levelname)s] %(name)s: %(message)s\n%(pathname)s:%(lineno)d',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))

    # Rule trace of the reducer
    rewrites_handler = RotatingFileHandler(
        os.path.join(log_dir, "rewrites.log"),
        maxBytes=cfg.max_bytes,
        backupCount=cfg.backup_count * 2,
        encoding="utf-8",
    )
    rewrites_handler.setLevel(logging.INFO)
    rewrites_handler.setFormatter(logging.Formatter(
        '%(asctime)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))

    root_logger.setLevel(level)
    root_logger.addHandler(main_handler)
    root_logger.addHandler(error_handler)

    if cfg.console if console is None else console:
        console_handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            log_time_format="%H:%M:%S",
        )
        console_handler.setLevel(level)
        root_logger.addHandler(console_handler)

    rewrites_logger = logging.getLogger("rewrites")
    rewrites_logger.setLevel(logging.INFO)
    rewrites_logger.addHandler(rewrites_handler)
    rewrites_logger.propagate = False

    _configured_dir = log_dir
    return log_dir


def reset_logging():
    """Drop the handlers installed by setup_logging (tests)"""
    global _configured_dir
    for name in (None, "rewrites"):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            if isinstance(handler, (RotatingFileHandler, RichHandler)):
                logger.removeHandler(handler)
                handler.close()
    logging.getLogger("rewrites").propagate = True
    _configured_dir = None
