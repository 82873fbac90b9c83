"""
Report writers for check and convergence tables
"""
