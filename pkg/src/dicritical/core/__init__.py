"""Exact scalars, sparse polynomials and linear algebra."""
