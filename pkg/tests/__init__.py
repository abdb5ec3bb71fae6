"""
Tests para frobmaps v1.0
"""
