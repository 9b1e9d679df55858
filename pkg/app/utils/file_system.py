import logging
from pathlib import Path
from typing import Union

class FileSystem:
    """Class for the few file system operations the log setup needs."""

    def create_folder(self, folder_path: Union[str, Path]) -> Path:
        """
        Create a folder (and parents) with restricted permissions.

        Args:
            folder_path (Union[str, Path]): Path where the folder should be created

        Returns:
            Path: The resolved folder path

        Raises:
            ValueError: If path is a symbolic link
            OSError: If folder creation fails
        """
        folder_path = self.clean_path(path=folder_path)
        if not folder_path.exists():
            folder_path.mkdir(parents=True, exist_ok=True, mode=0o700)
            logging.info("Folder created with restricted permissions.")
        return folder_path

    def clean_path(self, path: Union[str, Path]) -> Path:
        """
        Resolve a path and reject symbolic links.

        Args:
            path (Union[str, Path]): Path to clean and validate

        Returns:
            Path: Cleaned and validated path

        Raises:
            ValueError: If path is a symbolic link
        """
        cleaned_path = Path(path).resolve()
        if cleaned_path.is_symlink():
            raise ValueError("Access denied. Path is a symbolic link and cannot be accessed.")

        return cleaned_path
