"""
Configuration module for catalantri.
Loads settings from environment variables and provides them to other modules.
"""

import logging
import os
from pathlib import Path
from typing import List

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from catalantri.exceptions import ConfigurationError

# Load .env file from the project root
project_root = Path(__file__).parent.parent
env_path = project_root / ".env"
load_dotenv(env_path)

OUTPUT_FORMATS = ("ascii", "csv", "json")


class Config:
    """Application configuration loaded from environment variables."""

    # Logging
    LOG_LEVEL = os.getenv("CATALANTRI_LOG_LEVEL", "WARNING")

    # Verification
    WORKERS = os.getenv("CATALANTRI_WORKERS", "1")

    # CLI output
    FORMAT = os.getenv("CATALANTRI_FORMAT", "ascii")

    @classmethod
    def get_project_root(cls) -> Path:
        """Get the project root directory."""
        return project_root

    @classmethod
    def get_log_level(cls) -> int:
        """Get the numeric logging level."""
        level = logging.getLevelName(cls.LOG_LEVEL.strip().upper())
        if not isinstance(level, int):
            raise ConfigurationError(f"Unknown log level: {cls.LOG_LEVEL}")
        return level

    @classmethod
    def get_workers(cls) -> int:
        """Get the number of worker threads used by verify-all."""
        try:
            workers = int(cls.WORKERS)
        except ValueError:
            raise ConfigurationError(
                f"CATALANTRI_WORKERS is not an integer: {cls.WORKERS}"
            )
        if workers < 1:
            raise ConfigurationError("CATALANTRI_WORKERS must be at least 1")
        return workers

    @classmethod
    def get_format(cls) -> str:
        """Get the default CLI output format."""
        fmt = cls.FORMAT.strip().lower()
        if fmt not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"CATALANTRI_FORMAT must be one of {', '.join(OUTPUT_FORMATS)}"
            )
        return fmt

    @classmethod
    def validate(cls) -> bool:
        """
        Validate the configuration.
        Returns True if valid, raises ConfigurationError if not.
        """
        errors: List[str] = []

        for getter in (cls.get_log_level, cls.get_workers, cls.get_format):
            try:
                getter()
            except ConfigurationError as e:
                errors.append(str(e))

        if errors:
            raise ConfigurationError(
                "Configuration validation failed:\n"
                + "\n".join(f"  - {error}" for error in errors)
            )

        return True


def setup_logging(level: int = logging.WARNING, console: Console = None) -> logging.Logger:
    """
    Route the package logger through a single RichHandler.

    Args:
        level: Logging level for the ``catalantri`` logger
        console: Rich console to write to (stderr console if not provided)

    Returns:
        The configured package logger
    """
    logger = logging.getLogger("catalantri")
    logger.setLevel(level)

    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=console or Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        logger.addHandler(handler)
        logger.propagate = False

    return logger


# Convenience instance for importing
config = Config()
