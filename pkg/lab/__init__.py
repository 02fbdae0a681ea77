"""
Monte Carlo campaigns over random matrix ensembles.
"""
