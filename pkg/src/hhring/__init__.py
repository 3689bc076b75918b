"""Hochschild cohomology of the crown-quiver special biserial algebras."""
