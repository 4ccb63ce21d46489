"""Dense raster value types shared across the library.

All types validate on construction and freeze their backing arrays, so a
value can be shared between threads or cached without defensive copies.
Derived rasters are always new values.

Conventions: row-major storage, origin at the top-left corner, x grows to
the right and y grows downward.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "LabelMap",
    "BinaryMask",
    "ScalarField",
    "FeatureGrid",
    "FlowField",
    "make_label_map",
    "map_equal",
    "pixel_accuracy",
]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


def _require_finite(arr: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains non-finite values")


@dataclass(frozen=True)
class LabelMap:
    """H x W raster of dense class ids in ``range(num_classes)``."""

    data: np.ndarray
    num_classes: int

    def __post_init__(self):
        data = np.asarray(self.data)
        if data.ndim != 2 or data.size == 0:
            raise ValueError("label map must be a non-empty 2-D array")
        if not np.issubdtype(data.dtype, np.integer):
            raise ValueError("label map ids must be integers")
        if self.num_classes < 1:
            raise ValueError("num_classes must be >= 1")
        if data.min() < 0 or data.max() >= self.num_classes:
            raise ValueError(
                f"class id out of range: ids must lie in [0, {self.num_classes})"
            )
        object.__setattr__(self, "data", _freeze(data.astype(np.int32)))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class BinaryMask:
    """H x W raster of booleans."""

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data)
        if data.ndim != 2 or data.size == 0:
            raise ValueError("mask must be a non-empty 2-D array")
        object.__setattr__(self, "data", _freeze(data.astype(bool)))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def count(self) -> int:
        return int(np.count_nonzero(self.data))


@dataclass(frozen=True)
class ScalarField:
    """H x W raster of finite float64 values."""

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2 or data.size == 0:
            raise ValueError("scalar field must be a non-empty 2-D array")
        _require_finite(data, "scalar field")
        object.__setattr__(self, "data", _freeze(data))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class FeatureGrid:
    """C x H x W stack of finite float64 planes (channel-major)."""

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 3 or data.size == 0:
            raise ValueError("feature grid must be a non-empty 3-D (C, H, W) array")
        _require_finite(data, "feature grid")
        object.__setattr__(self, "data", _freeze(data))

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]


@dataclass(frozen=True)
class FlowField:
    """Per-pixel displacement in pixels: dx rightward, dy downward."""

    dx: np.ndarray
    dy: np.ndarray

    def __post_init__(self):
        dx = np.asarray(self.dx, dtype=np.float64)
        dy = np.asarray(self.dy, dtype=np.float64)
        if dx.ndim != 2 or dx.size == 0 or dx.shape != dy.shape:
            raise ValueError("flow components must be equal-shape 2-D arrays")
        _require_finite(dx, "flow dx")
        _require_finite(dy, "flow dy")
        object.__setattr__(self, "dx", _freeze(dx))
        object.__setattr__(self, "dy", _freeze(dy))

    @property
    def height(self) -> int:
        return self.dx.shape[0]

    @property
    def width(self) -> int:
        return self.dx.shape[1]

    @classmethod
    def zero(cls, height: int, width: int) -> "FlowField":
        z = np.zeros((height, width))
        return cls(z, z.copy())


def make_label_map(width: int, height: int, ids, num_classes: int) -> LabelMap:
    """Build a LabelMap from a flat row-major id sequence.

    Raises ValueError when the id count does not match width*height or any
    id falls outside [0, num_classes).
    """
    flat = np.asarray(ids)
    if flat.ndim != 1 or flat.size != width * height:
        raise ValueError(
            f"expected {width * height} ids for a {width}x{height} map, got {flat.size}"
        )
    return LabelMap(flat.reshape(height, width), num_classes)


def map_equal(a: LabelMap, b: LabelMap) -> bool:
    """True iff dimensions, num_classes and every id match."""
    if a.data.shape != b.data.shape or a.num_classes != b.num_classes:
        return False
    return bool(np.array_equal(a.data, b.data))


def pixel_accuracy(pred: LabelMap, gt: LabelMap) -> float:
    """Fraction of pixels whose ids agree."""
    if pred.data.shape != gt.data.shape:
        raise ValueError("pixel_accuracy: prediction and ground truth differ in size")
    return int(np.count_nonzero(pred.data == gt.data)) / pred.data.size
