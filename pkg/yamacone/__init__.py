"""
yamacone - conformal Laplacian and Yamabe equation near conical singularities
"""

__version__ = "0.1.0"
__logo__ = "🍦"
