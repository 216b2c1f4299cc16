"""
Canonical binary tries: persistent maps keyed by positive numbers
"""
