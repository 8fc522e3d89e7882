"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument violated a documented precondition."""


class NegativeDiscriminantError(DomainError):
    """The intransitive quadratic has no real roots.

    Carries the offending discriminant so callers can report it.
    """

    def __init__(self, discriminant):
        self.discriminant = discriminant
        super().__init__(f"negative discriminant: {discriminant}")


class EnumerationGuardError(DomainError):
    """A requested exhaustive enumeration exceeds the safety guard.

    Carries the partition count that triggered the refusal.
    """

    def __init__(self, n, partition_count, guard):
        self.n = n
        self.partition_count = partition_count
        self.guard = guard
        super().__init__(
            f"refusing to enumerate the {partition_count} partitions of "
            f"{n} (guard: {guard})"
        )
