"""Test module utils."""
