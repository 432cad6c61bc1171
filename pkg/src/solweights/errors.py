"""Exception types shared across the package."""

from __future__ import annotations


class SolweightsError(Exception):
    """Base class for all package errors."""


class CapExceeded(SolweightsError):
    """A closure or orbit grew past the allowed cap.

    Signals that the caller must switch to a structural method instead of
    enumeration.
    """


class OrbitCapExceeded(CapExceeded):
    """A subgroup-conjugation orbit grew past the allowed cap."""


class ElementNotInGroup(SolweightsError):
    """An element was expected to lie in a group but does not."""


class SubgroupNotContained(SolweightsError):
    """A subgroup was expected to be contained in a group but is not."""


class NotNormal(SolweightsError):
    """A subgroup was expected to be normal but is not."""


class DoesNotNormalize(SolweightsError):
    """A generator was expected to normalize a subgroup but does not."""


class UnknownSpec(SolweightsError):
    """A group spec string does not resolve in the registry."""


class UnsupportedSylow(SolweightsError):
    """No implemented cohomology path applies to this Sylow subgroup."""


class WrongSylowShape(SolweightsError):
    """The Sylow subgroup does not have the wreath shape the path needs."""


class Inconclusive(SolweightsError):
    """A vanishing test could not certify its conclusion.

    Not a proof of nonvanishing; some spectral term was nonzero or not
    computable by the implemented paths.
    """


class ValidationFailure(SolweightsError):
    """Table data failed a consistency check; message carries row identity."""


class CyclicInput(SolweightsError):
    """A cover relation expected to be acyclic has a cycle."""


class NotAFunctor(SolweightsError):
    """Face-map data violates functoriality (composites disagree)."""


class MissingCertificate(SolweightsError):
    """A required cohomology certificate is absent."""
