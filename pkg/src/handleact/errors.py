"""Exception types shared across the toolkit.

DomainError marks inputs that parse fine but violate a mathematical
precondition (bad twist order, genus below 2, mismatched groups); the CLI
maps it to exit status 1.  InputError marks malformed input files or
descriptions and maps to exit status 2.
"""


class DomainError(ValueError):
    pass


class InputError(ValueError):
    pass
