from .base import LiftingBase
from .decomposition import LiftingDecomposition, PsPdSplit
from .distance import Depth, DepthClass, DistanceReport, LiftingDistance, distance_to
from .full import Lifting, intersection_pairing
from .intersection import LiftingIntersection
from .oracle import LiftingOracle, gl2_oracle_pairing
from .phi import LiftingPhi, phi
