"""
Laguerre-type polynomial toolkit: exact LTP/GLP algebra, analytic checks,
power-function expansions and STO nuclear-attraction integrals
"""
__version__ = "1.0.0"
