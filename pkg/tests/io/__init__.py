"""Tests for I/O modules."""