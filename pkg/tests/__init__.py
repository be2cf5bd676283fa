"""Tests for the Q CLI application."""