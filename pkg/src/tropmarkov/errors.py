"""Error taxonomy shared by the library and the CLI.

DomainError: input is syntactically fine but outside an operation's domain
(off the skeleton, holomorphic parameters for a meromorphic-only query, ...).
UsageError: malformed input (bad flag syntax, empty argument list, non-prime p).
ResourceError: a configured bound was exceeded (orbit depth, step budget).
"""


class DomainError(ValueError):
    pass


class UsageError(ValueError):
    pass


class ResourceError(RuntimeError):
    pass
