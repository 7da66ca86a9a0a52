"""Exception types shared by every module."""


class NilBlobError(Exception):
    """Base class; the CLI maps any subclass to a nonzero exit code."""


class InvalidDiagram(NilBlobError):
    pass


class NotPerfectMatching(InvalidDiagram):
    pass


class NotPlanar(InvalidDiagram):
    pass


class MarkNotLeftExposed(InvalidDiagram):
    pass


class DuplicateMark(InvalidDiagram):
    pass


class SizeMismatch(NilBlobError):
    pass


class SingularParameter(NilBlobError):
    pass


class ZeroQ(SingularParameter):
    pass


class TableMiss(NilBlobError):
    pass


class ShapeMismatch(NilBlobError):
    pass


class NotInOrbit(NilBlobError):
    pass


class NotCentral(NilBlobError):
    pass


class MixedInnerOuter(NilBlobError):
    pass


class IndexOutOfRange(NilBlobError):
    pass


class TooSmallN(NilBlobError):
    pass
