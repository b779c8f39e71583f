"""Exception types shared across the package.

The CLI maps these onto process exit codes: bad input data is a
ValueError subclass (exit 2), violations of pinned arithmetic identities
are IdentityViolationError (exit 3, must never occur), and blown search
or size bounds are ResourceLimitError (exit 4).
"""


class InvalidFieldError(ValueError):
    """Modulus is not prime, or a field constraint (odd, > 3, ...) fails."""


class ZeroArgumentError(ValueError):
    """A multiplicative character was evaluated at 0 in strict mode."""


class UnsupportedConductorError(ValueError):
    """Characters of conductor exponent 2 or higher are out of scope."""


class FormalUnitError(ValueError):
    """A formal unramified unit reached a spot that needs a concrete value."""


class NotInSubgroupError(ValueError):
    """Discrete logarithm target is outside the cyclic group searched."""


class GroupMembershipError(ValueError):
    """A matrix or tuple is not in the group the action expects."""


class ResourceLimitError(RuntimeError):
    """A configured search bound (orbit size, curve scan, field degree) was hit."""


class RetryExhaustedError(RuntimeError):
    """Deterministic retries (pairing shift points) ran out."""


class IdentityViolationError(RuntimeError):
    """A pinned identity failed at runtime; signals an internal inconsistency."""


class NumericInstabilityError(RuntimeError):
    """A complex-embedding magnitude fell outside its tolerance."""
