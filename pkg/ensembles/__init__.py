"""
Random matrix ensembles.
"""
