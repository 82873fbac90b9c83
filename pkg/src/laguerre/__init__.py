"""
Exact Laguerre-type and generalized Laguerre polynomials
"""
