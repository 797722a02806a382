"""Tests for the ballotdet package."""
