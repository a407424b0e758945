"""Service factory to produces required services"""

from typing import Optional

from src.main.app.common.config.config_manager import load_config
from src.main.app.service.circuit_service import CircuitService
from src.main.app.service.fourier_service import FourierService
from src.main.app.service.impl.circuit_service_impl import CircuitServiceImpl
from src.main.app.service.impl.fourier_service_impl import FourierServiceImpl
from src.main.app.service.impl.simulator_service_impl import SimulatorServiceImpl
from src.main.app.service.impl.step_matrix_service_impl import StepMatrixServiceImpl
from src.main.app.service.simulator_service import SimulatorService
from src.main.app.service.step_matrix_service import StepMatrixService

_singleton_fourier_service_instance: Optional[FourierService] = None
_singleton_step_matrix_service_instance: Optional[StepMatrixService] = None
_singleton_circuit_service_instance: Optional[CircuitService] = None
_singleton_simulator_service_instance: Optional[SimulatorService] = None


def get_fourier_service(service_name: str = "default") -> FourierService:
    """
    Return an instance of the FourierService implementation.

    Returns:
        FourierService: An instance of the FourierServiceImpl class.
    """
    global _singleton_fourier_service_instance
    if service_name == "default":
        if _singleton_fourier_service_instance is None:
            _singleton_fourier_service_instance = FourierServiceImpl()
        return _singleton_fourier_service_instance
    else:
        raise ValueError(f"Unknown service name: {service_name}")


def get_step_matrix_service(service_name: str = "default") -> StepMatrixService:
    """
    Return an instance of the StepMatrixService implementation.

    Returns:
        StepMatrixService: An instance of the StepMatrixServiceImpl class.
    """
    global _singleton_step_matrix_service_instance
    if service_name == "default":
        if _singleton_step_matrix_service_instance is None:
            _singleton_step_matrix_service_instance = StepMatrixServiceImpl(
                strict_tolerance=load_config().numerics.strict_tolerance
            )
        return _singleton_step_matrix_service_instance
    else:
        raise ValueError(f"Unknown service name: {service_name}")


def get_circuit_service(service_name: str = "default") -> CircuitService:
    """
    Return an instance of the CircuitService implementation.

    Returns:
        CircuitService: An instance of the CircuitServiceImpl class.
    """
    global _singleton_circuit_service_instance
    if service_name == "default":
        if _singleton_circuit_service_instance is None:
            _singleton_circuit_service_instance = CircuitServiceImpl(step_service=get_step_matrix_service())
        return _singleton_circuit_service_instance
    else:
        raise ValueError(f"Unknown service name: {service_name}")


def get_simulator_service(service_name: str = "default") -> SimulatorService:
    """
    Return an instance of the SimulatorService implementation.

    Returns:
        SimulatorService: An instance of the SimulatorServiceImpl class.
    """
    global _singleton_simulator_service_instance
    if service_name == "default":
        if _singleton_simulator_service_instance is None:
            simulator_config = load_config().simulator
            _singleton_simulator_service_instance = SimulatorServiceImpl(
                check_norm=simulator_config.check_norm,
                norm_tolerance=simulator_config.norm_tolerance,
            )
        return _singleton_simulator_service_instance
    else:
        raise ValueError(f"Unknown service name: {service_name}")


def reset_services() -> None:
    """Drop every cached service so the next getter call reads the current configuration."""
    global _singleton_fourier_service_instance, _singleton_step_matrix_service_instance
    global _singleton_circuit_service_instance, _singleton_simulator_service_instance
    _singleton_fourier_service_instance = None
    _singleton_step_matrix_service_instance = None
    _singleton_circuit_service_instance = None
    _singleton_simulator_service_instance = None
