"""
Decision pipeline for unitary equivalence to a complex symmetric matrix.
"""
