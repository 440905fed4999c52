"""Level surfaces of coherence fields over the Bell-diagonal state tetrahedron.

Samples a chosen measure on a regular grid covering [-1, 1]^3 in correlation
space (optionally for an X-state slice at fixed Bloch components, optionally
after pre-mapping the grid through a decoherence channel), extracts
constant-value surfaces with marching cubes, classifies geometry against the
separable octahedron |c1| + |c2| + |c3| <= 1, and exports meshes as Wavefront
OBJ plus flat JSON statistics.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import channels, measures
from ._mc_tables import CORNER_OFFSETS, EDGE_CORNERS, EDGE_TABLE, TRI_TABLE
from .measures import MeasureKind
from .states import DomainError, TOL_PSD, bell_eigenvalues, x_eigenvalues

# Region classification slack on the octahedron boundary.
TOL_SEPARABLE = 1e-12

# Triangles at or below this area are dropped as degenerate.
DEGENERATE_AREA = 1e-14


class RegionTag(enum.Enum):
    """Where a point in correlation space sits."""

    INVALID = "invalid"
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


def classify_point(params) -> RegionTag:
    """Classify a correlation triple against the state set and the octahedron.

    Unphysical triples (any eigenvalue below -TOL_PSD) are invalid; physical
    ones are separable when |c1| + |c2| + |c3| <= 1 and entangled otherwise.
    """
    c1, c2, c3 = (float(v) for v in params)
    if any(math.isnan(v) for v in (c1, c2, c3)):
        return RegionTag.INVALID
    if min(bell_eigenvalues(c1, c2, c3)) < -TOL_PSD:
        return RegionTag.INVALID
    if abs(c1) + abs(c2) + abs(c3) <= 1.0 + TOL_SEPARABLE:
        return RegionTag.SEPARABLE
    return RegionTag.ENTANGLED


def _classify_arrays(c1, c2, c3):
    """Vectorized classify_point returning (invalid, entangled) boolean arrays."""
    lam_min = np.minimum.reduce(bell_eigenvalues(c1, c2, c3))
    invalid = ~(lam_min >= -TOL_PSD)  # catches NaN as invalid
    entangled = ~invalid & (np.abs(c1) + np.abs(c2) + np.abs(c3) > 1.0 + TOL_SEPARABLE)
    return invalid, entangled


def grid_axis(resolution: int) -> np.ndarray:
    """Node coordinates covering [-1, 1] inclusive, exactly sign-symmetric."""
    n = int(resolution)
    return (2.0 * np.arange(n) - (n - 1)) / (n - 1)


@dataclass
class ScalarGrid:
    """A measure sampled on a cubic grid over [-1, 1]^3.

    ``values[i, j, k]`` holds the field at (axis[i], axis[j], axis[k]) in
    (c1, c2, c3) order; masked (unphysical) nodes carry NaN.
    """

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 3 or len(set(self.values.shape)) != 1:
            raise DomainError(f"grid values must be cubic, got shape {self.values.shape}")
        if self.values.shape[0] < 8:
            raise DomainError("grid resolution must be at least 8 per axis")

    @property
    def resolution(self) -> int:
        return self.values.shape[0]

    @property
    def axis(self) -> np.ndarray:
        return grid_axis(self.resolution)


def sample_field(
    measure,
    resolution: int,
    slice: tuple[float, float] | None = None,
    channel=None,
    p: float | None = None,
    threads: int = 1,
) -> ScalarGrid:
    """Sample a coherence/discord field over the correlation-space grid.

    Parameters
    ----------
    measure : MeasureKind or str
        Field to sample.  Discord is only defined on the Bell-diagonal
        family, so it cannot be combined with a slice.
    resolution : int
        Nodes per axis, at least 8; nodes include the endpoints of [-1, 1].
    slice : (r, s), optional
        Sample X states at these fixed Bloch components instead of
        Bell-diagonal states.  Restricted to the l1 and relative-entropy
        measures.
    channel, p : optional
        Pre-map every grid triple through this decoherence channel at
        strength p before evaluating the measure (Bell-diagonal only).
    threads : int
        Worker threads for the sampling pass.  Output is identical for any
        thread count.

    Nodes whose state is unphysical are masked with NaN; with a channel
    pre-map the mask reflects the initial (unmapped) state.
    """
    measure = measure if isinstance(measure, MeasureKind) else MeasureKind(str(measure))
    n = int(resolution)
    if n < 8:
        raise DomainError("resolution must be at least 8")
    if threads < 1:
        raise DomainError("threads must be at least 1")
    if slice is not None:
        if measure in (MeasureKind.DISCORD, MeasureKind.TRACE_NORM):
            raise DomainError(
                f"measure {measure.value!r} is not defined for an X-state slice"
            )
        if channel is not None:
            raise DomainError(
                "channel maps act on the Bell-diagonal family; they cannot be "
                "combined with an X-state slice"
            )
        r, s = (float(v) for v in slice)
        for name, v in (("r", r), ("s", s)):
            if not -1.0 <= v <= 1.0:
                raise DomainError(f"{name} must lie in [-1, 1], got {v}")
    if channel is not None and p is None:
        raise DomainError("channel pre-map requires a probability p")

    axis = grid_axis(n)
    c2 = axis[None, :, None]
    c3 = axis[None, None, :]
    values = np.empty((n, n, n), dtype=float)

    def fill(i0: int, i1: int) -> None:
        c1 = axis[i0:i1, None, None]
        if slice is None:
            lam_min = np.minimum.reduce(bell_eigenvalues(c1, c2, c3))
        else:
            lam_min = np.minimum.reduce(x_eigenvalues(r, s, c1, c2, c3))
        physical = lam_min >= -TOL_PSD
        if channel is not None:
            e1, e2, e3 = channels.correlation_map_values(channel, p, c1, c2, c3)
        else:
            e1, e2, e3 = c1, c2, c3
        if measure in (MeasureKind.L1, MeasureKind.TRACE_NORM):
            block = np.broadcast_to(measures.l1_values(e1, e2), physical.shape).copy()
        elif measure is MeasureKind.RELATIVE_ENTROPY:
            if slice is None:
                block = measures.bell_relative_entropy_values(e1, e2, e3)
            else:
                block = measures.x_relative_entropy_values(r, s, e1, e2, e3)
            block = np.broadcast_to(block, physical.shape).copy()
        else:
            block = np.broadcast_to(
                measures.bell_discord_values(e1, e2, e3), physical.shape
            ).copy()
        block[~physical] = np.nan
        values[i0:i1] = block

    if threads == 1:
        fill(0, n)
    else:
        chunk = -(-n // threads)
        bounds = [(i, min(i + chunk, n)) for i in range(0, n, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda b: fill(*b), bounds))
    return ScalarGrid(values)


@dataclass
class TriangleMesh:
    """Indexed triangle mesh in correlation coordinates with per-vertex tags."""

    vertices: np.ndarray
    triangles: np.ndarray
    region_tags: list[RegionTag] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=int).reshape(-1, 3)
        if self.triangles.size and (
            self.triangles.min() < 0 or self.triangles.max() >= len(self.vertices)
        ):
            raise DomainError("triangle indices out of range")
        if len(self.region_tags) not in (0, len(self.vertices)):
            raise DomainError("region tag count does not match vertex count")

    @classmethod
    def empty(cls) -> "TriangleMesh":
        return cls(np.zeros((0, 3)), np.zeros((0, 3), dtype=int), [])

    def __len__(self) -> int:
        return len(self.triangles)

    def triangle_areas(self) -> np.ndarray:
        if not len(self.triangles):
            return np.zeros(0)
        a = self.vertices[self.triangles[:, 0]]
        b = self.vertices[self.triangles[:, 1]]
        c = self.vertices[self.triangles[:, 2]]
        return np.linalg.norm(np.cross(b - a, c - a), axis=1) / 2

    def centroids(self) -> np.ndarray:
        if not len(self.triangles):
            return np.zeros((0, 3))
        return self.vertices[self.triangles].mean(axis=1)


def extract_isosurface(grid: ScalarGrid, level: float) -> TriangleMesh:
    """Extract the triangle mesh of the field's level set via marching cubes.

    Linear interpolation along cube edges; any cube with a masked (NaN)
    corner contributes nothing, which trims the surface at the boundary of
    the physical set.  A level outside the field's range simply yields an
    empty mesh.  Output is deterministic: cubes are visited in index order
    and shared edge vertices are emitted once, at first encounter.
    """
    if not isinstance(grid, ScalarGrid):
        grid = ScalarGrid(grid)
    level = float(level)
    if not level > 0.0 or math.isnan(level):
        raise DomainError(f"level must be positive, got {level}")

    vals = grid.values
    axis = grid.axis
    n = grid.resolution

    # Cube case indices, vectorized over all (n-1)^3 cubes at once.
    m = n - 1
    case = np.zeros((m, m, m), dtype=np.int16)
    masked = np.zeros((m, m, m), dtype=bool)
    for bit, (di, dj, dk) in enumerate(CORNER_OFFSETS):
        corner = vals[di : m + di, dj : m + dj, dk : m + dk]
        masked |= np.isnan(corner)
        case |= (corner < level).astype(np.int16) << bit
    active = np.argwhere(~masked & (case > 0) & (case < 255))

    vertex_ids: dict[tuple[int, int, int, int], int] = {}
    verts: list[tuple[float, float, float]] = []
    tris: list[tuple[int, int, int]] = []

    for i, j, k in active:
        cube_case = int(case[i, j, k])
        cube_edges = EDGE_TABLE[cube_case]
        edge_vertex = [-1] * 12
        for e in range(12):
            if not cube_edges & (1 << e):
                continue
            ca, cb = EDGE_CORNERS[e]
            na = (i + CORNER_OFFSETS[ca][0], j + CORNER_OFFSETS[ca][1], k + CORNER_OFFSETS[ca][2])
            nb = (i + CORNER_OFFSETS[cb][0], j + CORNER_OFFSETS[cb][1], k + CORNER_OFFSETS[cb][2])
            if nb < na:
                na, nb = nb, na
            ax = 0 if na[0] != nb[0] else (1 if na[1] != nb[1] else 2)
            key = (*na, ax)
            vid = vertex_ids.get(key)
            if vid is None:
                va = vals[na]
                vb = vals[nb]
                t = (level - va) / (vb - va)
                pos = [axis[na[0]], axis[na[1]], axis[na[2]]]
                pos[ax] += t * (axis[na[ax] + 1] - axis[na[ax]])
                vid = len(verts)
                vertex_ids[key] = vid
                verts.append(tuple(pos))
            edge_vertex[e] = vid
        t_list = TRI_TABLE[cube_case]
        for a in range(0, len(t_list), 3):
            tris.append(
                (
                    edge_vertex[t_list[a]],
                    edge_vertex[t_list[a + 1]],
                    edge_vertex[t_list[a + 2]],
                )
            )

    if not verts:
        return TriangleMesh.empty()

    mesh = TriangleMesh(np.array(verts), np.array(tris, dtype=int).reshape(-1, 3))
    areas = mesh.triangle_areas()
    mesh.triangles = mesh.triangles[areas > DEGENERATE_AREA]
    mesh.region_tags = [classify_point(v) for v in mesh.vertices]
    return mesh


def filter_triangles(mesh: TriangleMesh, keep) -> TriangleMesh:
    """Keep only triangles whose centroid satisfies the predicate.

    ``keep`` is called with a centroid triple and returns a bool.  Vertices no
    longer referenced are dropped and indices compacted, preserving order.
    This realizes restricted surfaces such as the part of a coherence level
    set on which discord agrees with the coherence.
    """
    if not len(mesh.triangles):
        return mesh
    kept = np.array([bool(keep(c)) for c in mesh.centroids()])
    triangles = mesh.triangles[kept]
    used = np.unique(triangles)
    remap = {int(old): new for new, old in enumerate(used)}
    return TriangleMesh(
        mesh.vertices[used],
        np.array([[remap[int(v)] for v in t] for t in triangles], dtype=int).reshape(-1, 3),
        [mesh.region_tags[int(v)] for v in used] if mesh.region_tags else [],
    )


def surface_stats(mesh: TriangleMesh) -> dict:
    """Area totals and the entangled-region share of a mesh.

    A triangle counts as entangled when its centroid classifies entangled.
    An empty mesh reports zero areas and fraction 0.
    """
    areas = mesh.triangle_areas()
    total = float(areas.sum())
    if total > 0.0:
        cent = mesh.centroids()
        _, entangled = _classify_arrays(cent[:, 0], cent[:, 1], cent[:, 2])
        fraction = float(areas[entangled].sum() / total)
    else:
        fraction = 0.0
    return {
        "total_area": total,
        "entangled_area_fraction": fraction,
        "vertex_count": int(len(mesh.vertices)),
        "triangle_count": int(len(mesh.triangles)),
    }


def export_obj(mesh: TriangleMesh, destination, metadata: dict | None = None) -> None:
    """Write a mesh as ASCII Wavefront OBJ.

    One ``v`` line per vertex with 9-significant-digit coordinates, one
    1-indexed ``f`` line per triangle, preceded by comment lines recording
    the metadata (measure, level, resolution, slice, ...).  ``destination``
    is a path or a writable text stream.  Identical meshes and metadata
    produce byte-identical files.
    """

    def write(out) -> None:
        out.write("# constant-level surface mesh\n")
        for key, value in (metadata or {}).items():
            if isinstance(value, float):
                value = repr(value)
            elif value is None:
                value = "none"
            out.write(f"# {key}: {value}\n")
        out.write(f"# vertices: {len(mesh.vertices)}\n")
        out.write(f"# triangles: {len(mesh.triangles)}\n")
        for x, y, z in mesh.vertices:
            out.write(f"v {x:.9g} {y:.9g} {z:.9g}\n")
        for a, b, c in mesh.triangles:
            out.write(f"f {a + 1} {b + 1} {c + 1}\n")

    if hasattr(destination, "write"):
        write(destination)
    else:
        with open(destination, "w", encoding="ascii", newline="\n") as handle:
            write(handle)
