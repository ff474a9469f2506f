"""Exception types shared across the library."""


class SlvirError(Exception):
    """Base class for library-specific errors."""


class NotRepresentable(SlvirError):
    """The requested value does not exist inside the Gaussian-rational field."""


class BadPolynomial(SlvirError):
    """Polynomial input violates the degree or support requirements."""


class NotASubalgebra(SlvirError):
    """The given span is not closed under the Lie bracket."""


class NotInSubalgebra(SlvirError):
    """The element does not lie in the polynomial subalgebra."""


class NotWeightModule(SlvirError):
    """The module has no weight-space decomposition."""


class WrongAlgebra(SlvirError):
    """The algebra element cannot act on this module family."""


class DepthExceeded(SlvirError):
    """A computation escaped the precomputed depth window; rebuild with a larger depth."""


class InvalidParameter(SlvirError):
    """Module or suite parameters violate their preconditions."""
