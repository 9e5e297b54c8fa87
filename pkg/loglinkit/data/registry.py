"""
Bundled datasets, verified against their SHA-256 checksums before use.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

from loglinkit.exceptions import ChecksumError, DataError
from loglinkit.table.contingency import ContingencyTable, FactorSpec
from loglinkit.table.io import read_table_csv
from loglinkit.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BundledDataset:
    """A CSV shipped with the package."""

    name: str
    filename: str
    sha256: str
    factors: tuple[FactorSpec, ...]
    description: str = ""


EDWARDS_HAVRANEK = BundledDataset(
    name="edwards_havranek_m2",
    filename="edwards_havranek_m2.csv",
    sha256="2fe58550003181ae875fefaed9398c47bba1be174219c446cb880e92e785ea8f",
    factors=tuple(FactorSpec.binary(name) for name in "ABCDEF"),
    description=(
        "Edwards and Havranek (1985): six binary risk factors for coronary heart "
        "disease in 1841 Czech car-factory workers"
    ),
)

DATASETS: dict[str, BundledDataset] = {EDWARDS_HAVRANEK.name: EDWARDS_HAVRANEK}


def file_sha256(path: Path) -> str:
    """Hex SHA-256 of a file."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


class DatasetRegistry:
    """Looks up bundled datasets under ``root``."""

    def __init__(self, root: Path | None = None):
        self.root = root if root is not None else Path(__file__).parent

    def names(self) -> list[str]:
        return sorted(DATASETS)

    def get(self, name: str) -> BundledDataset:
        """Dataset by name, with or without the .csv suffix."""
        key = name.removesuffix(".csv")
        if key not in DATASETS:
            raise DataError(
                f"Unknown bundled dataset '{name}' (available: {', '.join(self.names())})"
            )
        return DATASETS[key]

    def has(self, name: str) -> bool:
        return name.removesuffix(".csv") in DATASETS

    def path(self, name: str) -> Path:
        return self.root / self.get(name).filename

    def verify(self, name: str) -> Path:
        """
        Check a bundled file against its checksum.

        Returns:
            Path to the verified file

        Raises:
            ChecksumError: If the file content changed
            DataError: If the file is missing
        """
        dataset = self.get(name)
        path = self.path(name)
        if not path.exists():
            raise DataError("Bundled data file is missing", path)
        actual = file_sha256(path)
        if actual != dataset.sha256:
            raise ChecksumError(path, dataset.sha256, actual)
        logger.debug("Checksum verified for %s", path.name)
        return path

    def load(self, name: str) -> ContingencyTable:
        """Verify and read a bundled dataset."""
        path = self.verify(name)
        return read_table_csv(path, self.get(name).factors)


_registry = DatasetRegistry()


def get_registry() -> DatasetRegistry:
    """Get the package-wide dataset registry."""
    return _registry
