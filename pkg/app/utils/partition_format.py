from typing import Optional

from app.algebra.partitions import Partition, PartitionException, validate_partition
from app.constants.app_constants import AppConstants
from app.constants.app_messages import AppMessages

def parse_partition(text: str, n: Optional[int] = None) -> Partition:
    """Parse dot-joined parts ("3.1.1"); "0" or "" is the empty partition.

    Raises:
        PartitionException: for malformed text or a weight other than `n`
    """
    text = text.strip()
    if text in ("", AppConstants.EMPTY_PARTITION):
        parts = []
    else:
        try:
            parts = [int(part) for part in text.split(AppConstants.PARTITION_SEPARATOR)]
            parts = validate_partition(parts)
        except (ValueError, PartitionException) as err:
            raise PartitionException(AppMessages.BAD_PARTITION.format(text)) from err
    return validate_partition(parts, n)

def format_partition(partition: Partition) -> str:
    if not partition:
        return AppConstants.EMPTY_PARTITION
    return AppConstants.PARTITION_SEPARATOR.join(str(part) for part in partition)
