"""Exceptions shared across the package."""


class OracleInfeasibleError(RuntimeError):
    """A brute-force oracle was asked for more work than its stated bound.

    Raised instead of silently truncating an enumeration; the message names
    the offending cardinality.
    """
