"""
Dense complex linear algebra: Hermitian eigensolver, overlaps, exponentials.
"""
