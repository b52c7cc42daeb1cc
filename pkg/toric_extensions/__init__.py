"""
Equivariant extensions of nef toric line bundles, as a Django application
"""

__version__ = '0.3.0'
