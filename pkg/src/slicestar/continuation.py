"""Branch continuation over a disk, with a lazily filled grid cache.

Several constructions (the continuous square root of f_v^s, *-logarithm
lifts, the angle recovery of the exponential-product solver) extend a
multivalued scalar from an anchor point over a simply connected disk.
Path independence makes any in-disk polyline valid, so each query walks a
straight segment from the nearest already-computed grid node (disks are
convex).  A ``stepper`` advances the branch value across one segment and
returns None when the segment must be bisected; bisection depth is capped,
making genuine obstructions (a zero of the continued quantity inside the
disk) fail loudly instead of silently jumping branches.

The cache mutates on first evaluation, so a freshly built continuation
(and anything holding one, e.g. a *-logarithm) should stay on one thread
until warmed up; afterwards reads are safe to share.
"""

from __future__ import annotations

from typing import Callable, Optional, TypeVar

from .errors import PathTooWild

V = TypeVar("V")

#: default lateral resolution of the cache grid
GRID = 64

#: default bisection depth per segment
MAX_DEPTH = 20

Stepper = Callable[[complex, V, complex], Optional[V]]


class BranchContinuation:
    """Continue a branch value from an anchor across one disk component."""

    def __init__(self, anchor: complex, seed, stepper: Stepper, *,
                 center: complex, radius: float, grid: int = GRID,
                 max_depth: int = MAX_DEPTH, error=PathTooWild):
        self.anchor = anchor
        self.seed = seed
        self.stepper = stepper
        self.center = center
        self.radius = radius
        self.grid = grid
        self.max_depth = max_depth
        self.error = error
        self._cells: dict[tuple[int, int], tuple[complex, V]] = {}
        self._filled: list[tuple[complex, V]] = [(anchor, seed)]
        self._memo: dict[complex, V] = {anchor: seed}

    # -- grid helpers ----------------------------------------------------

    def _cell_of(self, z: complex) -> tuple[int, int]:
        side = 2 * self.radius
        ix = int((z.real - (self.center.real - self.radius)) / side * self.grid)
        iy = int((z.imag - (self.center.imag - self.radius)) / side * self.grid)
        clamp = lambda i: min(max(i, 0), self.grid - 1)
        return clamp(ix), clamp(iy)

    def _node_center(self, ix: int, iy: int) -> complex:
        side = 2 * self.radius
        z = complex(self.center.real - self.radius + (ix + 0.5) * side / self.grid,
                    self.center.imag - self.radius + (iy + 0.5) * side / self.grid)
        # pull corner cells inside the disk so the stem stays evaluable
        d = abs(z - self.center)
        if d > 0.92 * self.radius:
            z = self.center + (z - self.center) * (0.92 * self.radius / d)
        return z

    # -- continuation ----------------------------------------------------

    def _continue(self, z0: complex, v0, z1: complex, depth: int):
        if z1 == z0:
            return v0
        v = self.stepper(z0, v0, z1)
        if v is not None:
            return v
        if depth <= 0:
            raise self.error(
                f"branch continuation failed between {z0} and {z1}: "
                f"refinement depth exhausted")
        zm = (z0 + z1) / 2
        vm = self._continue(z0, v0, zm, depth - 1)
        return self._continue(zm, vm, z1, depth - 1)

    def _fill_cell(self, key: tuple[int, int]):
        hit = self._cells.get(key)
        if hit is not None:
            return hit
        zc = self._node_center(*key)
        zs, vs = min(self._filled, key=lambda t: abs(t[0] - zc))
        v = self._continue(zs, vs, zc, self.max_depth)
        entry = (zc, v)
        self._cells[key] = entry
        self._filled.append(entry)
        return entry

    def at(self, z: complex):
        hit = self._memo.get(z)
        if hit is not None:
            return hit
        zc, vc = self._fill_cell(self._cell_of(z))
        v = self._continue(zc, vc, z, self.max_depth)
        self._memo[z] = v
        return v
