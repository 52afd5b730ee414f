"""Exception hierarchy shared by every vertexlab module."""


class VertexLabError(Exception):
    pass


class IceRuleViolation(VertexLabError):
    pass


class CapExceeded(VertexLabError):
    pass


class DegenerateMeasure(VertexLabError):
    pass


class DegenerateParams(VertexLabError):
    pass


class KernelSingular(VertexLabError):
    pass


class RegionOutOfBounds(VertexLabError):
    pass


class ConfluentPoints(VertexLabError):
    pass


class PoleOnContour(VertexLabError):
    pass


class Divergent(VertexLabError):
    pass


class TruncationTooSmall(VertexLabError):
    pass


class UnknownRelation(VertexLabError):
    pass


class ConfigInvalid(VertexLabError):
    pass
