"""
Command-line interface, group files and text formatting.
"""

from .commands import cli
from .group_file import format_group_file, load_group_file, parse_group_file, parse_group_matrix
from .group_library import GroupLibrary

__all__ = [
    'cli',
    'format_group_file',
    'load_group_file',
    'parse_group_file',
    'parse_group_matrix',
    'GroupLibrary'
]
