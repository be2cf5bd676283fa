"""Configuration tests for Q CLI."""