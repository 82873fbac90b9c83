"""
Exact and high-precision arithmetic substrate
"""
