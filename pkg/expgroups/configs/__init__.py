from expgroups.configs.configs import (
    DEFAULT_POINTS,
    EngineConfigs,
    GenParams,
    ObfuscationConfigs,
)

__all__ = ["DEFAULT_POINTS", "EngineConfigs", "GenParams", "ObfuscationConfigs"]
