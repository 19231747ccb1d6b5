"""Extend standard argparse with the features used by the CLI."""

from __future__ import annotations

import argparse


class StoreTrueCondAction(argparse._StoreTrueAction):
    """Argparse store_true action making other options (not) required.

    argparse does not support conditional requirements. The action behaves
    like the `store_true` action and additionally switches the `required`
    flag of other options when it is used.

    Attributes:
        make_required: options that become required
        make_not_required: options that become optional

    Example:
        >>> parser = argparse.ArgumentParser()
        >>> n_opt = parser.add_argument('--n', type=int, required=True)
        >>> _ = parser.add_argument('--kite', action=StoreTrueCondAction,
        ...                         make_not_required=[n_opt])
        >>> args = parser.parse_args(['--kite'])
        >>> args == argparse.Namespace(n=None, kite=True)
        True

        >>> parser = argparse.ArgumentParser()
        >>> n_opt = parser.add_argument('--n', type=int, required=True)
        >>> _ = parser.add_argument('--kite', action='store_true')
        >>> parser.parse_args(['--kite'])
        Traceback (most recent call last):
          ...
        SystemExit: 2
    """

    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        """Initialize the action object.

        The arguments are the same as for the `store_true` action with two
        optional arguments `make_required` and `make_not_required`: lists
        of Action objects returned by ArgumentParser.add_argument().
        """
        _make_required = kwargs.pop('make_required', [])
        _make_not_required = kwargs.pop('make_not_required', [])
        super().__init__(option_strings, dest, **kwargs)
        self.make_required = _make_required
        self.make_not_required = _make_not_required

    def __call__(self, parser, namespace, values, option_string=None):
        """Execute the action."""
        for required in self.make_required:
            required.required = True
        for not_required in self.make_not_required:
            not_required.required = False
        return super().__call__(parser, namespace, values, option_string)


def add_common_arguments(
        parser: argparse.ArgumentParser, version: str | None = None,
        verbose: bool = True) -> None:
    """Add common CLI arguments.

    Added arguments: `-V`, `--version`, `-v`, `--verbose`.

    Args:
        parser: Argument parser to add arguments to
        version: Program version string - must be set to add
            `-V` and `--version`.
        verbose: Add verbose argument
    """
    if verbose:
        parser.add_argument(
            '-v', '--verbose', action='count', default=0,
            help='increase output verbosity, can be repeated')
    if version:
        parser.add_argument(
            '-V', '--version', action='version', version=f'%(prog)s {version}')


def add_io_arguments(
        parser: argparse.ArgumentParser, input_help: str,
        output_help: str | None = None) -> None:
    """Add `--input`/`-i` and optionally `--output`/`-o` file arguments."""
    parser.add_argument('-i', '--input', required=True, help=input_help)
    if output_help:
        parser.add_argument('-o', '--output', required=True, help=output_help)


def positive_float(text: str) -> float:
    """Convert argument to a float greater than zero.

    Examples:
        >>> positive_float('1e-6')
        1e-06
        >>> positive_float('0')
        Traceback (most recent call last):
          ...
        argparse.ArgumentTypeError: expected a positive number, got '0'
    """
    try:
        value = float(text)
    except ValueError:
        value = -1.0
    if not value > 0:
        raise argparse.ArgumentTypeError(
                f'expected a positive number, got {text!r}')
    return value
