"""Exception types shared across the package."""


class MonoidGeomError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(MonoidGeomError):
    """Vector or matrix sizes do not line up."""


class AmbientMismatch(MonoidGeomError):
    """Elements or monoids live in different ambient groups."""


class MonoidMismatch(MonoidGeomError):
    """Two values belong to different monoids."""


class DimensionLimitExceeded(MonoidGeomError):
    """A cone computation exceeded the configured dimension cap."""


class NotPointed(MonoidGeomError):
    """The cone has a nontrivial lineality space where a pointed one is required."""


class NotSharp(MonoidGeomError):
    """Operation requires a sharp monoid."""


class NotFine(MonoidGeomError):
    """Operation requires a fine monoid."""


class NotSaturated(MonoidGeomError):
    """Operation requires a saturated monoid."""


class NotToric(MonoidGeomError):
    """Operation requires a toric monoid (fine, saturated, torsion-free group)."""


class NotMember(MonoidGeomError):
    """An element was expected to belong to the monoid but does not."""


class WrongDimension(MonoidGeomError):
    """The monoid does not have the dimension the operation requires."""


class WrongHeight(MonoidGeomError):
    """The prime ideal does not have the height the operation requires."""


class NonLocalFunctional(MonoidGeomError):
    """The functional is not local (vanishes on a nonunit)."""


class ImproperIdeal(MonoidGeomError):
    """The ideal is the whole monoid where a proper ideal is required."""


class NotAcceptable(MonoidGeomError):
    """The pair (monoid, ideal) is not an acceptable idealized monoid."""


class WitnessMismatch(MonoidGeomError):
    """A supplied functional does not witness the given face."""


class ArityMismatch(MonoidGeomError):
    """Generator maps have inconsistent arities."""


class ZeroElement(MonoidGeomError):
    """The zero algebra element was passed where a nonzero one is required."""


class SearchBudgetExceeded(MonoidGeomError):
    """An exact search exceeded its configured enumeration budget."""
