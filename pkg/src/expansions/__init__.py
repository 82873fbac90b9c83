"""
Laguerre-series expansions of r^eta* exp(-xi r)
"""
