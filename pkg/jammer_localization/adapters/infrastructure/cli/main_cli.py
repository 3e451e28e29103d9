"""Terminal CLI infrastructure adapter"""

from jammer_localization.adapters.domain.simulation.cli.commands import complexity, ideal, modulation, multi, run
from jammer_localization.adapters.infrastructure.cli.setup import cli
from jammer_localization.shared.infrastructure import Services
from jammer_localization.shared.logging.port import LoggerPort

# Add experiment preset commands
cli.add_command(ideal, name="ideal")
cli.add_command(multi, name="multi")
cli.add_command(modulation, name="modulation")
# Add custom run command
cli.add_command(run, name="run")
# Add complexity benchmark command
cli.add_command(complexity, name="complexity")


# --- CLI main execution ---
def run_cli(services: Services, logger: LoggerPort):
    """
    Main function to launch the CLI.
    """

    # Creates context object to pass services and logger
    context_data = {Services: services, LoggerPort: logger}

    cli.main(obj=context_data)
