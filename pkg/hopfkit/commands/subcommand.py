"""
Base class for the ``hopfkit`` subcommands.
"""
import argparse


class Subcommand:
    """
    A subcommand adds its own subparser to the top-level parser and sets ``func`` to the
    function that runs it. That function takes the parsed arguments and returns the exit
    status.
    """
    def add_subparser(self, name: str, parser: argparse._SubParsersAction) -> argparse.ArgumentParser:
        # pylint: disable=protected-access
        raise NotImplementedError
