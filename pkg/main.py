"""
coxhurwitz command-line application.

Hurwitz orbits, straightening and braid witnesses for reflection
factorizations in Coxeter groups.
"""

from cli import cli


def main():
    """Main entry point."""
    cli(prog_name="coxhurwitz")


if __name__ == "__main__":
    main()
