"""
Machine checks of orthonormality, completeness, differential equations and potentials
"""
