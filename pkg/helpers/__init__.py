from helpers.errors import (
    SimulatorError,
    AddressError,
    AddressAlignmentError,
    AddressRangeError,
    CoordinateRangeError,
    PolicyError,
    TimingParamsError,
    RstValidationError,
    RoutingError,
    InsufficientDataError,
    ConfigValidationError,
    PresetNotFoundError,
    ArtifactWriteError,
    SimulationError,
)
from helpers.logger import configure_logging, get_logger
from helpers.units import cycles_to_ns, ns_to_cycles, gbps
from helpers.canonical_json import canonical_dumps
