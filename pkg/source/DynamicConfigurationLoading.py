import yaml
from typing import Optional

DEFAULT_CONFIG_PATH = "config.yaml"


class DotDict(dict):
    """
    Dictionary with attribute access, nested dictionaries are wrapped on access.
    """
    def __getattr__(self, item):
        val = self.get(item)
        if isinstance(val, dict) and not isinstance(val, DotDict):
            return DotDict(val)
        return val

    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__


def get_config(path: Optional[str] = None) -> DotDict:
    with open(path or DEFAULT_CONFIG_PATH, "r") as f:
        config_dict = yaml.safe_load(f) or {}
    return DotDict(config_dict)


def section(settings: DotDict, name: str) -> DotDict:
    """
    Returns a config section, an empty one when the key is missing.
    """
    value = getattr(settings, name)
    return value if isinstance(value, DotDict) else DotDict()
