"""
Interface de linha de comando.
"""
from src.cli.commands import cli

__all__ = ["cli"]
