"""
Library of bundled group files (config/groups).
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from core.coxeter_system import CoxeterSystem
from cli.group_file import format_group_file, load_group_file
from utils.config_manager import get_config
from utils.error_handler import ConfigurationError

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


class GroupLibrary:
    """Resolve group names or paths to Coxeter systems."""

    def __init__(self, groups_dir: Optional[Path] = None):
        """
        Initialize group library.

        Args:
            groups_dir: Directory of ``*.txt`` group files
                       (default: config ``groups.directory``)
        """
        if groups_dir is None:
            groups_dir = Path(get_config().get("groups.directory", "config/groups"))
            if not groups_dir.is_absolute():
                groups_dir = PROJECT_ROOT / groups_dir
        self.groups_dir = Path(groups_dir)
        self._cache: Dict[Path, CoxeterSystem] = {}

    def list_groups(self) -> List[Dict[str, str]]:
        """
        List bundled groups.

        Returns:
            List of dicts with ``name``, ``description`` and ``path``
        """
        groups = []
        if not self.groups_dir.exists():
            logger.warning(f"Group directory not found: {self.groups_dir}")
            return groups
        for path in sorted(self.groups_dir.glob("*.txt")):
            description = ""
            with open(path, "r") as f:
                for line in f:
                    if line.startswith("#"):
                        description = line.lstrip("#").strip()
                        break
            groups.append({"name": path.stem, "description": description, "path": str(path)})
        return groups

    def resolve(self, name_or_path: str) -> Path:
        """Path of a group given by file path or bundled name."""
        path = Path(name_or_path)
        if path.is_file():
            return path
        bundled = self.groups_dir / f"{name_or_path}.txt"
        if bundled.is_file():
            return bundled
        raise ConfigurationError(
            f"Group {name_or_path!r} is neither a file nor a bundled group in {self.groups_dir}"
        )

    def load(self, name_or_path: str) -> CoxeterSystem:
        """Load (and cache) a Coxeter system."""
        path = self.resolve(name_or_path).resolve()
        if path not in self._cache:
            self._cache[path] = load_group_file(path)
            logger.info(f"Loaded group {path.stem} of rank {self._cache[path].rank}")
        return self._cache[path]

    def save(self, system: CoxeterSystem, name: str, description: str = "") -> Path:
        """Write a system as a group file in the library directory."""
        self.groups_dir.mkdir(parents=True, exist_ok=True)
        path = self.groups_dir / f"{name}.txt"
        with open(path, "w") as f:
            f.write(format_group_file(system, description))
        logger.info(f"Saved group file: {path}")
        return path
