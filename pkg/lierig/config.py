"""Runtime settings for lierig.

Values are read from the process environment after loading an optional
``.env`` file found from the current working directory upwards. Nothing is
required: every setting has a default.
"""

import logging
import os

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_WORKERS = 1
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings:
    def __init__(self, env_file=None):
        """Load ``.env`` (explicit path or discovered) and read LIERIG_* variables."""
        env_path = env_file or find_dotenv(usecwd=True)
        if env_path and os.path.exists(env_path):
            load_dotenv(env_path)
            logger.debug(f"Environment variables loaded from {env_path}")
        else:
            logger.debug("No .env file found - using process environment and defaults")

        self.catalog_dir = os.getenv("LIERIG_CATALOG_DIR") or None
        self.log_level = self._read_log_level(os.getenv("LIERIG_LOG_LEVEL"))
        self.workers = self._read_workers(os.getenv("LIERIG_WORKERS"))

    @staticmethod
    def _read_log_level(raw):
        if not raw:
            return DEFAULT_LOG_LEVEL
        level = raw.strip().upper()
        if level not in _LOG_LEVELS:
            logger.warning(f"Ignoring unknown LIERIG_LOG_LEVEL={raw!r}; using {DEFAULT_LOG_LEVEL}")
            return DEFAULT_LOG_LEVEL
        return level

    @staticmethod
    def _read_workers(raw):
        if not raw:
            return DEFAULT_WORKERS
        try:
            workers = int(raw)
        except ValueError:
            logger.warning(f"Ignoring non-integer LIERIG_WORKERS={raw!r}")
            return DEFAULT_WORKERS
        if workers < 1:
            logger.warning(f"LIERIG_WORKERS must be >= 1, got {workers}")
            return DEFAULT_WORKERS
        return workers

    def log_status(self):
        """Log which settings are in effect."""
        logger.info(f"catalog_dir: {self.catalog_dir or '(unset)'}")
        logger.info(f"log_level: {self.log_level}")
        logger.info(f"workers: {self.workers}")
