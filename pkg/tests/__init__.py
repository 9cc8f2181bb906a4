"""
Unit tests for coxhurwitz.
"""
