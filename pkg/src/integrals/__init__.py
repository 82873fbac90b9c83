"""
Radial nuclear-attraction integrals of Slater-type orbitals
"""
