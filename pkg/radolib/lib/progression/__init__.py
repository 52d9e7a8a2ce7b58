from .Progression import Progression
from .Properties import shiftedAverageDefect, checkProgressionProperties, PROPERTY_NAMES
