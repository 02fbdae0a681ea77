"""
Value types for the UECSM toolkit.
"""
