class SimulatorError(Exception):
    """Erro base do simulador. Todo erro sabe se descrever em JSON."""

    def __init__(self, message, details=None):
        super().__init__(message)
        self.message = message
        self.details = list(details or [])

    def to_dict(self):
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class AddressError(SimulatorError):
    pass


class AddressAlignmentError(AddressError):
    pass


class AddressRangeError(AddressError):
    pass


class CoordinateRangeError(SimulatorError):
    pass


class PolicyError(SimulatorError):
    pass


class TimingParamsError(SimulatorError):
    pass


class RstValidationError(SimulatorError):
    pass


class RoutingError(SimulatorError):
    pass


class InsufficientDataError(SimulatorError):
    pass


class ConfigValidationError(SimulatorError):
    """Configuração inválida; `details` traz um item por campo com problema."""

    @classmethod
    def from_pydantic(cls, exc, prefix=""):
        issues = []
        for err in exc.errors():
            loc = ".".join(str(part) for part in err.get("loc", ()))
            if prefix:
                loc = f"{prefix}.{loc}" if loc else prefix
            issues.append({"field": loc, "message": err.get("msg", "")})
        return cls("Configuração inválida", issues)


class PresetNotFoundError(SimulatorError):
    pass


class ArtifactWriteError(SimulatorError):
    pass


class SimulationError(SimulatorError):
    pass
