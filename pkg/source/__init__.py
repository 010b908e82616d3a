from source.ToolkitService import ToolkitService, run_toolkit
from source.DynamicConfigurationLoading import get_config
