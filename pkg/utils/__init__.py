"""
Utility functions for the UECSM toolkit.
"""
