# backend/core/exceptions.py


class GaugeRadiiError(Exception):
    """Base class for every error raised by the gaugeradii apps"""


class GeometryError(GaugeRadiiError, ValueError):
    """Invalid geometric input: empty sets, zero directions, bad parameters"""


class DegenerateGaugeError(GeometryError):
    """A body without interior (or without the origin inside) used as a gauge"""


class LpError(GaugeRadiiError):
    """The LP backend failed for a reason other than infeasible/unbounded"""


class CertificateError(GaugeRadiiError):
    """
    No optimal-containment certificate within tolerance.

    At an optimal position a certificate always exists, so this signals a
    numerical failure. ``residual`` is the best |sum mu_j u^j| found.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UnsupportedGaugeError(GaugeRadiiError, LookupError):
    """A gauge kind outside the catalog a caller supports"""

    def __init__(self, kind, supported):
        self.kind = kind
        self.supported = tuple(supported)
        super().__init__(
            f"unsupported gauge {kind!s}; supported kinds: {', '.join(self.supported)}"
        )
