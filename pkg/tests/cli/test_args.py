"""Tests for CLI argument parsing."""

import argparse

import pytest

from certilab import __version__
from certilab.cli.args import setup_argparse


class TestCLIArgs:
    """Tests for CLI argument parsing."""

    def test_setup_argparse(self):
        """Test that the parser has the four subcommands."""
        parser = setup_argparse()
        assert isinstance(parser, argparse.ArgumentParser)
        assert parser.prog == "certilab"
        subparsers = [a for a in parser._actions if isinstance(a, argparse._SubParsersAction)]
        assert len(subparsers) == 1
        assert sorted(subparsers[0].choices) == ["gen", "report", "run", "verify"]

    def test_gen_arguments(self):
        """Test gen options and their defaults."""
        args = setup_argparse().parse_args(["gen", "-f", "hull", "-p", "r=5", "-o", "hull.json"])
        assert args.command == "gen"
        assert args.family == "hull"
        assert args.params == "r=5"
        assert args.seed == 0
        assert args.out == "hull.json"
        assert args.debug is False

    def test_run_arguments(self):
        """Test run options and their defaults."""
        args = setup_argparse().parse_args(
            ["run", "--instance", "i.json", "--algo", "jls", "--seed", "0-3", "--out", "r.json", "--no-timing"]
        )
        assert args.algo == "jls"
        assert args.seed == "0-3"
        assert args.no_timing is True
        assert args.workers is None
        assert args.params is None

    def test_verify_and_report_arguments(self):
        """Test verify defaults and report positionals."""
        parser = setup_argparse()
        args = parser.parse_args(["verify", "-i", "i.json", "-r", "r.json", "-o", "rep", "--debug"])
        assert args.checks == "certified"
        assert args.debug is True
        args = parser.parse_args(["report", "a.json", "b.json", "--config", "my.conf"])
        assert args.reports == ["a.json", "b.json"]
        assert args.out is None
        assert args.config == "my.conf"

    def test_invalid_choices_exit(self):
        """Test that unknown families, algorithms and subcommands are rejected."""
        parser = setup_argparse()
        with pytest.raises(SystemExit):
            parser.parse_args(["gen", "-f", "grid", "-o", "x.json"])
        with pytest.raises(SystemExit):
            parser.parse_args(["run", "-i", "i.json", "-a", "dijkstra", "-o", "r.json"])
        with pytest.raises(SystemExit):
            parser.parse_args([])

    def test_version(self, capsys):
        """Test the version flag."""
        with pytest.raises(SystemExit) as info:
            setup_argparse().parse_args(["--version"])
        assert info.value.code == 0
        assert __version__ in capsys.readouterr().out
