from __future__ import annotations

import json
import logging
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

ROOT = "qtough"

# record attributes copied into the JSON line when present
EXTRAS = ("op", "check", "suite", "theorem", "b", "l", "n", "s", "omega", "seed", "count", "status", "err")


def _plain(v: Any) -> Any:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, np.generic):
        return v.item()
    return str(v)


class JsonLineFormatter(logging.Formatter):
    """One JSON object per record: ts, lvl, src, msg and the known extras."""

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "ts": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "lvl": record.levelname,
            "src": record.name[len(ROOT) + 1:] if record.name.startswith(ROOT + ".") else record.name,
            "msg": record.getMessage(),
        }
        for k in EXTRAS:
            if hasattr(record, k):
                payload[k] = getattr(record, k)
        if record.exc_info and "err" not in payload:
            payload["err"] = f"{record.exc_info[0].__name__}: {record.exc_info[1]}"
        return json.dumps(payload, ensure_ascii=False, default=_plain)


def get_logger(module: str) -> logging.Logger:
    """Child of the package logger, so one setup_logger call covers every module."""
    return logging.getLogger(f"{ROOT}.{module}")


def setup_logger(name: str, level: str, log_file: Path | None = None) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    for h in logger.handlers:
        h.close()
    logger.handlers.clear()
    logger.propagate = False

    fmt = JsonLineFormatter()

    # stdout is reserved for report bytes
    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(fmt)
    logger.addHandler(sh)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        fh = logging.FileHandler(log_file, encoding="utf-8")
        fh.setFormatter(fmt)
        logger.addHandler(fh)

    return logger


def log(logger: logging.Logger, level: int, msg: str, **extra: Any) -> None:
    logger.log(level, msg, extra=extra)
