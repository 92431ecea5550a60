"""Exception types shared by the library and the command line."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad vertex label, non-flat, non-tree...)."""


class CapacityError(RuntimeError):
    """Request exceeds the exhaustive-enumeration limits this library honours."""
