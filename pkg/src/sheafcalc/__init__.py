"""Exact calculator for constructible sheaves on the plane.

Builds indicator sheaves on locally closed planar regions over a prime
field, convolves them with closed or open norm balls, takes directional
half-plane persistence profiles (the sheaf-theoretic Radon transform),
decomposes profiles into decorated barcodes, and compares objects through
bottleneck / interleaving-style distances.  All geometry and all levels
are exact: rationals on the grid backend, quadratic irrationals on the
Euclidean one.
"""

__version__ = "0.1.0"
