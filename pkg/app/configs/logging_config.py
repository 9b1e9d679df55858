from dataclasses import dataclass
from typing import Optional

@dataclass
class LoggingConfig:
    level: str
    formatter: str
    date_format: str
    folder: Optional[str]
    log_file: str
    max_bytes: int
    backup_count: int
