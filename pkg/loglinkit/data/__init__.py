"""Bundled datasets and published reference values."""

from loglinkit.data.registry import (
    DATASETS,
    EDWARDS_HAVRANEK,
    BundledDataset,
    DatasetRegistry,
    file_sha256,
    get_registry,
)

__all__ = [
    "DATASETS",
    "EDWARDS_HAVRANEK",
    "BundledDataset",
    "DatasetRegistry",
    "file_sha256",
    "get_registry",
]
