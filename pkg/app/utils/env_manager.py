import os

class EnvManager:
    def __init__(self) -> None:
        pass

    def get_env_variable(self, key, default=None):
        if key not in os.environ:
            if default is not None:
                return default
            raise KeyError(f"Enviroment variable {key} is not found")
        return os.environ[key]

    def get_int_env_variable(self, key, default=None) -> int:
        """Read an integer variable; raises ValueError on non-integer text."""
        value = self.get_env_variable(key, default)
        return int(value)
