from .scheme import InterpolationScheme
from .interpolant import RationalInterpolant, RHSolutionY
from .apparatus import EndpointPair, GApparatus, ErrorModel
from .geometry import Contour, DiscreteMeasure
from .preset import FigurePreset
