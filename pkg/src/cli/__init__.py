# cli package
from src.cli.commands import COMMAND_TABLE, run
from src.cli.run_config import RunConfig, build_run_config, load_run_config, resolve_threads
