from vknot.core.config_manager import Config
from vknot.helpers.logger import LOGGER

Config.load()
LOGGER(__name__).debug("Initializing...")
