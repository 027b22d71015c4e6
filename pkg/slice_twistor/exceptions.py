"""
Custom Exceptions
Error classes raised by the slice and twistor kernels
"""


class SliceTwistorError(Exception):
    """Base class for all library errors"""
    pass


class RealInput(SliceTwistorError):
    """Raised when a quaternion on the real axis is given where Im(q) != 0 is required"""
    pass


class SouthPole(SliceTwistorError):
    """Raised when the u chart is asked for I = -i"""
    pass


class Pole(SliceTwistorError):
    """Raised when a holomorphic map is evaluated at an exact pole"""
    pass


class BranchCut(SliceTwistorError):
    """Raised when a square root argument lies on the negative real axis"""
    pass


class OutOfDomain(SliceTwistorError):
    """Raised when a point lies outside the domain descriptor of a map or function"""
    pass


class HoloSyntaxError(SliceTwistorError):
    """Raised when an expression string does not follow the grammar"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class DegenerateUnits(SliceTwistorError):
    """Raised when the representation formula is given J = K"""
    pass


class NotAStem(SliceTwistorError):
    """Raised when a stem pair fails the parity condition F(conj z) = conj F(z)"""
    pass


class DomainMismatch(SliceTwistorError):
    """Raised when slice functions with different domains are combined"""
    pass


class ZeroNormal(SliceTwistorError):
    """Raised when the slice reciprocal is evaluated on the zero set of N(f)"""
    pass


class NotInvertible(SliceTwistorError):
    """Raised when a conformal transformation fails the invertibility condition"""
    pass


class DegeneratePlane(SliceTwistorError):
    """Raised when a plane has c2 = c3 = 0 and cannot be solved for a splitting"""
    pass


class BranchInconsistent(SliceTwistorError):
    """Raised when no square root pairing satisfies the quadric system"""
    pass


class TooLarge(SliceTwistorError):
    """Raised when a scan grid exceeds the configured cell budget"""
    pass


class XiSixVanishes(SliceTwistorError):
    """Raised when a transform curve meets xi6 = 0 and cannot be normalized"""
    pass


class NotSliceAffine(SliceTwistorError):
    """Raised when the first slice derivative of a product is not slice constant"""
    pass


class SingularDifferential(SliceTwistorError):
    """Raised when the differential of a slice function is not invertible"""
    pass


class WrongHalfSpace(SliceTwistorError):
    """Raised when a quaternion is required to have a positive i component"""
    pass
