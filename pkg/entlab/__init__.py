"""
.. package:: entlab
    :platform: Linux, MacOS, Windows
    :synopsis: Entropy inequalities and entanglement bounds for finite quantum states
"""

from . import (  # noqa: F401
    config,
    entropy,
    extremal,
    matcore,
    measures,
    serialization,
    states,
    sweep,
    units,
)
from ._version import __version__  # noqa: F401
from .bounds_report import BoundsReport, IdentityReport  # noqa: F401
from .config import EstimatorConfig  # noqa: F401
from .decomposition import Decomposition  # noqa: F401
from .density_matrix import DensityMatrix  # noqa: F401
from .equality_certificate import EqualityCertificate  # noqa: F401
from .estimate_result import EstimateResult  # noqa: F401
from .hermitian_spectrum import HermitianSpectrum  # noqa: F401
from .inequality_report import InequalityReport  # noqa: F401
from .pure_state import PureState  # noqa: F401
from .reporter import SweepReporter  # noqa: F401
from .rotation_descent import RotationDescent  # noqa: F401
from .saturating_spec import SaturatingSpec  # noqa: F401
from .sharpness_witness import SharpnessWitness  # noqa: F401
from .sweep import SweepSummary  # noqa: F401
