"""Command-line front end: ``quotkit <group> <command>``."""

from .main import main

__all__ = ["main"]
