"""Exception hierarchy shared by every module of the package."""


class WarpdegError(Exception):
    """Base class for all package errors."""


class ShadowError(WarpdegError, ValueError):
    pass


class EmptyShadow(ShadowError):
    pass


class NonInvolutivePairing(ShadowError):
    pass


class NotSphereEmbeddable(ShadowError):
    pass


class NotKnotShadow(ShadowError):
    pass


class NotConnected(ShadowError):
    pass


class CodecError(WarpdegError, ValueError):
    pass


class PDSyntaxError(CodecError):
    """Malformed PD or Gauss text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LabelMultiplicityError(CodecError):
    pass


class AlternationImpossible(WarpdegError):
    pass


class FeatureAbsent(WarpdegError):
    pass


class TrigonCountMismatch(WarpdegError):
    def __init__(self, message, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(message)


class TransportFailure(WarpdegError):
    pass


class LimitExceeded(WarpdegError):
    pass
