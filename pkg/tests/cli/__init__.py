"""CLI tests for Q CLI."""