"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for every failure raised by this package."""


class NonFiniteError(GeometryError):
    pass


# kernel
class CenterInversionError(GeometryError):
    """The point coincides with the inversion center; its image is at infinity."""


class LineThroughCenterError(GeometryError):
    """The line passes through the circle center; its pole is at infinity."""


class NotOnCircleError(GeometryError):
    pass


class IdenticalCirclesError(GeometryError):
    pass


# triangles
class CollinearVerticesError(GeometryError):
    pass


class RightTriangleError(GeometryError):
    """Raised where a right angle makes the construction degenerate."""


class NotAcuteError(GeometryError):
    pass


# porism
class InvalidPairError(GeometryError):
    """The (circumcircle, Euler circle) pair does not allow the operation."""


class NoTriangleError(GeometryError):
    """The seed lies on a sterile arc: the tangent at it misses the inverted Euler circle."""


class SeedNotOnCircleError(GeometryError):
    pass


class NotRightPairError(InvalidPairError):
    pass


class ExternalTangencyError(NotRightPairError):
    """Externally tangent circles: no triangle has this circumcircle and Euler circle."""


class DegenerateSeedError(GeometryError):
    pass


# conics
class PedalPointOnCircleError(GeometryError):
    pass


class FocusNotAtCenterError(GeometryError):
    pass
