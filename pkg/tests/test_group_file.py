"""
Unit tests for group files and the bundled group library.
"""

import pytest

from cli.group_file import format_group_file, load_group_file, parse_group_file, parse_group_matrix
from cli.group_library import GroupLibrary
from core.scalar import INF
from core.standard_types import standard_system
from utils.error_handler import ConfigurationError, GroupFileParseError


class TestParseGroupFile:
    """Test the plain-text matrix format."""

    def test_a2(self):
        system = parse_group_file("rank 2\nm 1 2 3")
        assert system.coxeter_matrix == ((1, 3), (3, 1))
        assert system.group_order() == 6

    def test_i2_5(self):
        system = parse_group_file("rank 2\nm 1 2 5\n")
        assert system.field.L == 5
        assert system.group_order() == 10

    def test_infinite_entry(self):
        system = parse_group_file("rank 2\nm 1 2 inf")
        assert system.coxeter_matrix[0][1] == INF
        assert not system.is_finite()

    def test_comments_and_defaults(self):
        """Unlisted pairs commute; comments and blank lines are skipped."""
        text = "# type A1 x A1 x A1\n\nrank 3  # three generators\n"
        assert parse_group_matrix(text) == [[1, 2, 2], [2, 1, 2], [2, 2, 1]]

    @pytest.mark.parametrize("text,line", [
        ("rank 2\nm 1 2 3\nm 1 2 4", 3),
        ("rank 2\nm 1 2 1", 2),
        ("rank 2\nm 1 1 3", 2),
        ("rank 2\nm 2 1 3", 2),
        ("rank 2\nm 1 3 3", 2),
        ("rank 2\nm 1 2 x", 2),
        ("rank 2\nm 1 2", 2),
        ("m 1 2 3\nrank 2", 1),
        ("rank 2\nrank 3", 2),
        ("rank 2\nedge 1 2 3", 2),
        ("# nothing here\n", 1),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GroupFileParseError) as info:
            parse_group_matrix(text)
        assert info.value.line_number == line
        assert str(info.value).startswith(f"line {line}:")

    def test_format_round_trip(self):
        """Formatting keeps the Coxeter matrix."""
        system = standard_system("H3")
        text = format_group_file(system, "icosahedral")
        assert text.startswith("# icosahedral\nrank 3\n")
        assert parse_group_file(text).coxeter_matrix == system.coxeter_matrix

    def test_load_names_by_stem(self, tmp_path):
        path = tmp_path / "pentagon.txt"
        path.write_text("rank 2\nm 1 2 5\n")
        assert load_group_file(path).name == "pentagon"


class TestGroupLibrary:
    """Test bundled group lookup."""

    def test_bundled_groups(self):
        library = GroupLibrary()
        names = [g["name"] for g in library.list_groups()]
        for name in ("a2", "a3", "a5", "b3", "h3", "i2_5", "i2_inf", "a2_affine"):
            assert name in names
        assert all(g["description"] for g in library.list_groups())

    def test_bundled_orders(self):
        library = GroupLibrary()
        assert library.load("a3").group_order() == 24
        assert library.load("b3").group_order() == 48
        assert library.load("h3").group_order() == 120
        assert not library.load("a2_affine").is_finite()

    def test_load_caches(self):
        library = GroupLibrary()
        assert library.load("a2") is library.load("a2")

    def test_resolve_path(self, tmp_path):
        path = tmp_path / "mine.txt"
        path.write_text("rank 1\n")
        library = GroupLibrary(tmp_path)
        assert library.load(str(path)).rank == 1
        assert library.load("mine").rank == 1

    def test_unknown_group(self, tmp_path):
        with pytest.raises(ConfigurationError):
            GroupLibrary(tmp_path).resolve("nope")

    def test_save(self, tmp_path):
        library = GroupLibrary(tmp_path / "groups")
        path = library.save(standard_system("B2"), "b2", "square")
        assert path.exists()
        assert library.list_groups() == [{"name": "b2", "description": "square", "path": str(path)}]

    def test_missing_directory(self, tmp_path):
        assert GroupLibrary(tmp_path / "absent").list_groups() == []


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
