"""
Command-line interface
"""

from .main import run, build_parser, main

__all__ = ['run', 'build_parser', 'main']
