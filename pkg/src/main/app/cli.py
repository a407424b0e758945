"""Command line startup that wires configuration, logging, routing and the exception handlers"""

import os
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from src.main.app.common.config.config import LogConfig
from src.main.app.common.config.config_manager import load_config
from src.main.app.common.exception.exception import ServiceException
from src.main.app.common.exception.exception_handler import (
    global_exception_handler,
    service_exception_handler,
    validation_exception_handler,
)
from src.main.app.factory.service_factory import reset_services
from src.main.app.router.router import create_parser


def setup_logging(log_config: LogConfig) -> None:
    """
    Route diagnostics to standard error, plus a rotating file when a path is configured.

    Args:
        log_config: The log section of the configuration.
    """
    logger.remove()
    logger.add(sys.stderr, level=log_config.level)
    if log_config.log_file_path:
        logger.add(log_config.log_file_path, level=log_config.level, rotation=log_config.rotation)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse the arguments, run one subcommand and map its outcome to an exit status.

    Args:
        argv: Arguments without the program name, sys.argv[1:] when omitted.

    Returns:
        int: 0 on success, 1 for a failed verification, 2 for a rejected input,
            3 for an internal error.
    """
    args = create_parser().parse_args(argv)
    if args.env:
        os.environ["ENV"] = args.env
    if args.config_file:
        os.environ["CONFIG_FILE"] = args.config_file
    if args.env or args.config_file:
        load_config.cache_clear()
        reset_services()
    try:
        setup_logging(load_config().log)
        logger.debug(f"running {args.subcommand} with {vars(args)}")
        return args.handler(args)
    except ServiceException as e:
        return service_exception_handler(e)
    except ValidationError as e:
        return validation_exception_handler(e)
    except Exception as e:
        return global_exception_handler(e)


def run() -> None:
    sys.exit(main())
