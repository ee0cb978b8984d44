"""
Exception hierarchy shared by every stage of the library.
"""

import json
from typing import Any, Optional


class ModtopError(Exception):
    """Base class for all library errors.

    Args:
        message: Human readable description
        witness: Optional JSON-serialisable counterexample (indices, ids, triples)
    """

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (witness: {json.dumps(witness, default=str)})"
        super().__init__(message)


class ConfigError(ModtopError):
    """Configuration file could not be read or holds invalid values."""


class ValidationError(ModtopError):
    """An input document or table violates a structural requirement.

    The ``pointer`` attribute is a JSON-pointer style path into the input document.
    """

    def __init__(self, message: str, witness: Optional[Any] = None, pointer: str = ""):
        self.pointer = pointer
        if pointer:
            message = f"{pointer}: {message}"
        super().__init__(message, witness)


class ParseError(ValidationError):
    """Spec file is not valid JSON or does not have a recognised shape."""


class SizeCapError(ValidationError):
    pass


class NonAssociativeError(ValidationError):
    pass


class NotDistributiveError(ValidationError):
    pass


class NoIdentityError(ValidationError):
    pass


class NotUnitalError(ValidationError):
    pass


class NotAssociativeActionError(ValidationError):
    pass


class NotBiadditiveError(ValidationError):
    pass


class ZeroModuleError(ValidationError):
    pass


class ParentMismatchError(ModtopError):
    pass


class RingMismatchError(ModtopError):
    pass


class NotASubmoduleError(ModtopError):
    pass


class NotFullyInvariantError(ModtopError):
    pass


class NotProperError(ModtopError):
    pass


class NotATopologyError(ModtopError):
    pass


class EmptySpaceError(ModtopError):
    pass


class UnknownCheckError(ModtopError):
    pass


class SubjectKindMismatchError(ModtopError):
    pass


class ConsistencyError(ModtopError):
    """Two independent computations that must agree returned different answers."""
