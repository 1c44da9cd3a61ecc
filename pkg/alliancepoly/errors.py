"""Exception hierarchy shared by the library and the CLI."""


class AlliancePolyError(Exception):
    """Base class for every error raised by alliancepoly.

    ``exit_code`` is the process exit status the CLI uses for the error.
    """

    exit_code = 1


class DomainError(AlliancePolyError):
    """Input is well formed but the requested operation is undefined for it."""

    exit_code = 1


class InputError(AlliancePolyError):
    """Input could not be parsed or is outside the accepted bounds."""

    exit_code = 2


class GraphFormatError(InputError):
    """Malformed graph6 / edge-list data or an invalid graph description."""


class PolyFormatError(InputError):
    """Malformed polynomial JSON document."""


class FamilySpecError(InputError):
    """Unknown family tag or parameters outside the family's bounds."""


class ConfigError(InputError):
    """Invalid enumeration configuration (flag or environment variable)."""


class GuardExceededError(AlliancePolyError):
    """Enumeration visited more connected subsets than the configured guard allows."""

    exit_code = 3

    def __init__(self, limit: int, visited: int):
        super().__init__(
            f"enumeration guard exceeded: visited {visited} connected subsets (limit {limit})"
        )
        self.limit = limit
        self.visited = visited

    def __reduce__(self):
        # Raised inside pool workers; must survive the trip back to the parent.
        return (type(self), (self.limit, self.visited))


class InvariantError(AlliancePolyError):
    """Internal consistency check failed."""

    exit_code = 4
