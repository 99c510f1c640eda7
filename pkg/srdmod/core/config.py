# srdmod/core/config.py
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Environment
    ENV: str = "dev"
    LOG_LEVEL: str = "WARNING"

    # Coefficient field (0 = rationals, otherwise a prime p < 2**31)
    CHARACTERISTIC: int = 0

    # Complex capacity
    MAX_VERTICES: int = 64
    EXHAUSTIVE_MAX_N: int = 8

    # Operator enumeration
    MAX_DEGREE: int = 6

    # Multigraded box for the Cech complex
    BOX_LO: int = -4
    BOX_HI: int = 4

    # Truncated D*m span: extra operator degree above the inputs
    DDM_TRUNCATION_SLACK: int = 2

    # Randomness
    SEED: int = 42
    RANDOM_SAMPLES: int = 25

    # Output
    SCHEMA_VERSION: str = "1"

    model_config = SettingsConfigDict(env_prefix="SRDMOD_", env_file=".env", extra="ignore")

    @property
    def BOX(self) -> tuple:
        return (self.BOX_LO, self.BOX_HI)


settings = Settings()
