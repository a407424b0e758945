from typing import List, Optional


class NumericsConfig:
    def __init__(
        self,
        tolerance: float = 1e-10,
        strict_tolerance: float = 1e-12,
    ) -> None:
        """
        Initializes numerics configuration with default comparison tolerances.

        Args:
            tolerance (float): Default entrywise tolerance for equality checks. Default is 1e-10.
            strict_tolerance (float): Tolerance for structurally exact constructions. Default is 1e-12.
        """
        self.tolerance = tolerance
        self.strict_tolerance = strict_tolerance

    def __repr__(self) -> str:
        """
        Returns a string representation of the numerics configuration.

        Returns:
            str: A string representation of the NumericsConfig instance.
        """
        return f"{self.__class__.__name__}({self.__dict__})"


class SimulatorConfig:
    def __init__(
        self,
        check_norm: bool = True,
        norm_tolerance: float = 1e-9,
    ) -> None:
        """
        Initializes simulator configuration.

        Args:
            check_norm (bool): Whether to assert unit norm after every gate. Default is True.
            norm_tolerance (float): Allowed deviation of the state norm from one. Default is 1e-9.
        """
        self.check_norm = check_norm
        self.norm_tolerance = norm_tolerance

    def __repr__(self) -> str:
        """
        Returns a string representation of the simulator configuration.

        Returns:
            str: A string representation of the SimulatorConfig instance.
        """
        return f"{self.__class__.__name__}({self.__dict__})"


class CliConfig:
    def __init__(
        self,
        seed: int = 2024,
        random_vectors: int = 100,
        amplitude_digits: int = 17,
        eps_sweep: Optional[List[float]] = None,
    ) -> None:
        """
        Initializes command line configuration.

        Args:
            seed (int): Seed of the generator used for random verification vectors. Default is 2024.
            random_vectors (int): Number of random vectors per verification run. Default is 100.
            amplitude_digits (int): Significant digits used to print amplitudes. Default is 17.
            eps_sweep (List[float]): Error tolerances swept by compare-approx. Default is 1, 0.1, 0.01, 0.001.
        """
        self.seed = seed
        self.random_vectors = random_vectors
        self.amplitude_digits = amplitude_digits
        self.eps_sweep = eps_sweep if eps_sweep is not None else [1.0, 0.1, 0.01, 0.001]

    def __repr__(self) -> str:
        """
        Returns a string representation of the command line configuration.

        Returns:
            str: A string representation of the CliConfig instance.
        """
        return f"{self.__class__.__name__}({self.__dict__})"


class LogConfig:
    def __init__(
        self,
        level: str = "INFO",
        log_file_path: str = "",
        rotation: str = "10 MB",
    ) -> None:
        """
        Initializes logging configuration.

        Args:
            level (str): Minimum level of the stderr sink. Default is 'INFO'.
            log_file_path (str): Path to an additional log file, empty disables it. Default is ''.
            rotation (str): Rotation policy of the log file. Default is '10 MB'.
        """
        self.level = level
        self.log_file_path = log_file_path
        self.rotation = rotation

    def __repr__(self) -> str:
        """
        Returns a string representation of the logging configuration.

        Returns:
            str: A string representation of the LogConfig instance.
        """
        return f"{self.__class__.__name__}({self.__dict__})"


class Config:
    def __init__(self, config_dict=None):
        config_dict = config_dict or {}
        self.numerics = NumericsConfig(**config_dict.get("numerics", None) or {})
        self.simulator = SimulatorConfig(**config_dict.get("simulator", None) or {})
        self.cli = CliConfig(**config_dict.get("cli", None) or {})
        self.log = LogConfig(**config_dict.get("log", None) or {})

    def __repr__(self) -> str:
        """
        Returns a string representation of the configuration.

        Returns:
            str: A string representation of the config instance,
                 showing all configuration attributes and their current values.
        """
        return f"{self.__class__.__name__}({self.__dict__})"
