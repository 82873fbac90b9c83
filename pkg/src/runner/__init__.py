"""
Batch drivers behind the command-line front end
"""
