"""Start Jammer Localization."""

import sys

from pydantic import ValidationError

from jammer_localization.adapters.infrastructure.cli.main_cli import run_cli
from jammer_localization.adapters.infrastructure.logging.terminal_logging import TerminalLogger
from jammer_localization.bootstrap import configure_dependencies
from jammer_localization.shared.infrastructure import Services
from jammer_localization.shared.settings.settings import AppSettings


def main():
    """Main entry point for the Jammer Localization application."""
    try:
        settings = AppSettings()
        logger = TerminalLogger(log_level=settings.log_level, log_file=settings.log_file)
    except (ValidationError, ValueError) as e:
        # No logger yet
        print(f"Invalid JAMLOC_* settings: {e}", file=sys.stderr)
        sys.exit(2)

    # --- Dependency Injection ---
    try:
        services: Services = configure_dependencies(logger, settings)
    except Exception as e:
        logger.critical(f"Failed to configure dependencies. Exiting. {e}")
        sys.exit(1)

    try:
        run_cli(services, logger)
    except KeyboardInterrupt:
        logger.info("Application interrupted by user.")
        sys.exit(130)
    finally:
        # Sure to flush logs before exiting
        logger.shutdown()


if __name__ == "__main__":
    main()
