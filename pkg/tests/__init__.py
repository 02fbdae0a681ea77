"""
Tests for the UECSM toolkit.
"""
