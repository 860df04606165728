"""Brute-force geometric enumeration of parallelogram polyominoes and polycubes.

Objects are encoded as extent sequences: a column is ``(bottom, top)`` with
inclusive cell rows, a plateau is ``(bottom, top, front, back)``. All
coordinate sequences are nondecreasing, consecutive slices overlap (they
share an edge or a face), and the first slice is pinned at 0 so each object
is produced once up to translation. The search is a depth-first walk that
emits profiles in strictly increasing lexicographic order.

Nothing here uses the counting formulas; it is the ground truth they are
checked against.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Iterator

MAX_AREA = 14
MAX_VOLUME = 10

Column = tuple[int, int]
Plateau = tuple[int, int, int, int]
ColumnProfile = tuple[Column, ...]
PlateauProfile = tuple[Plateau, ...]


class ProfileError(AssertionError):
    pass


def check_column_profile(profile: ColumnProfile) -> None:
    if not profile or profile[0][0] != 0:
        raise ProfileError(f"profile not normalized: {profile}")
    for b, t in profile:
        if t < b:
            raise ProfileError(f"empty column in {profile}")
    for (b, t), (b2, t2) in zip(profile, profile[1:]):
        if b2 < b or t2 < t:
            raise ProfileError(f"bottoms/tops decrease in {profile}")
        if b2 > t:
            raise ProfileError(f"disconnected columns in {profile}")


def check_plateau_profile(profile: PlateauProfile) -> None:
    if not profile or profile[0][0] != 0 or profile[0][2] != 0:
        raise ProfileError(f"profile not normalized: {profile}")
    for b, t, f, k in profile:
        if t < b or k < f:
            raise ProfileError(f"empty plateau in {profile}")
    for p, q in zip(profile, profile[1:]):
        if any(q[i] < p[i] for i in range(4)):
            raise ProfileError(f"extents decrease in {profile}")
        if q[0] > p[1] or q[2] > p[3]:
            raise ProfileError(f"plateaus do not share a face in {profile}")


def column_area(profile: ColumnProfile) -> int:
    return sum(t - b + 1 for b, t in profile)


def column_height(profile: ColumnProfile) -> int:
    return profile[-1][1] - profile[0][0] + 1


def plateau_volume(profile: PlateauProfile) -> int:
    return sum((t - b + 1) * (k - f + 1) for b, t, f, k in profile)


def plateau_extents(profile: PlateauProfile) -> tuple[int, int]:
    """(height, depth) of the bounding box."""
    return profile[-1][1] - profile[0][0] + 1, profile[-1][3] - profile[0][2] + 1


def enumerate_polyominoes(
    max_area: int | None = None,
    *,
    max_width: int | None = None,
    max_height: int | None = None,
    max_extent_sum: int | None = None,
    cap: int = MAX_AREA,
) -> Iterator[ColumnProfile]:
    """Every parallelogram polyomino within the given bounds, once each.

    Either ``max_area`` (at most ``cap``), both ``max_width`` and
    ``max_height``, or ``max_extent_sum`` (width + height) must be given;
    all supplied bounds apply together.
    """
    if max_area is not None and max_area > cap:
        raise ValueError(f"max_area {max_area} exceeds the oracle cap {cap}")
    if max_extent_sum is not None:
        max_width = min(max_width or max_extent_sum, max_extent_sum - 1)
        max_height = min(max_height or max_extent_sum, max_extent_sum - 1)
    if max_area is None and (max_width is None or max_height is None):
        raise ValueError("bound the search by area, by width and height, or by their sum")
    area_limit = max_area if max_area is not None else max_width * max_height
    width_limit = max_width if max_width is not None else area_limit
    top_limit = (max_height if max_height is not None else area_limit) - 1
    extent_limit = max_extent_sum if max_extent_sum is not None else width_limit + top_limit + 1

    def extend(profile: list[Column], area: int) -> Iterator[ColumnProfile]:
        out = tuple(profile)
        check_column_profile(out)
        yield out
        if len(profile) >= width_limit:
            return
        b, t = profile[-1]
        for b2 in range(b, t + 1):
            for t2 in range(t, top_limit + 1):
                size = t2 - b2 + 1
                # width and top only grow from here on
                if area + size > area_limit or len(profile) + 1 + t2 + 1 > extent_limit:
                    break
                profile.append((b2, t2))
                yield from extend(profile, area + size)
                profile.pop()

    for t in range(0, min(top_limit, area_limit - 1, extent_limit - 2) + 1):
        yield from extend([(0, t)], t + 1)


def enumerate_polycubes(
    max_volume: int | None = None,
    *,
    max_width: int | None = None,
    max_height: int | None = None,
    max_depth: int | None = None,
    max_extent_sum: int | None = None,
    cap: int = MAX_VOLUME,
) -> Iterator[PlateauProfile]:
    """Every parallelogram polycube within the given bounds, once each.

    Either ``max_volume`` (at most ``cap``), all three box bounds, or
    ``max_extent_sum`` (width + height + depth) must be given.
    """
    if max_volume is not None and max_volume > cap:
        raise ValueError(f"max_volume {max_volume} exceeds the oracle cap {cap}")
    if max_extent_sum is not None:
        max_width = min(max_width or max_extent_sum, max_extent_sum - 2)
        max_height = min(max_height or max_extent_sum, max_extent_sum - 2)
        max_depth = min(max_depth or max_extent_sum, max_extent_sum - 2)
    box = (max_width, max_height, max_depth)
    if max_volume is None and None in box:
        raise ValueError("bound the search by volume, by width, height and depth, or by their sum")
    if max_volume is None:
        volume_limit = max_width * max_height * max_depth
    else:
        volume_limit = max_volume
    width_limit = max_width if max_width is not None else volume_limit
    top_limit = (max_height if max_height is not None else volume_limit) - 1
    back_limit = (max_depth if max_depth is not None else volume_limit) - 1
    extent_limit = max_extent_sum if max_extent_sum is not None else width_limit + top_limit + back_limit + 2

    def extend(profile: list[Plateau], volume: int) -> Iterator[PlateauProfile]:
        out = tuple(profile)
        check_plateau_profile(out)
        yield out
        if len(profile) >= width_limit:
            return
        b, t, f, k = profile[-1]
        for b2 in range(b, t + 1):
            for t2 in range(t, top_limit + 1):
                rows = t2 - b2 + 1
                if volume + rows > volume_limit or len(profile) + 1 + t2 + 1 + k + 1 > extent_limit:
                    break
                for f2 in range(f, k + 1):
                    for k2 in range(k, back_limit + 1):
                        size = rows * (k2 - f2 + 1)
                        if volume + size > volume_limit or len(profile) + 1 + t2 + 1 + k2 + 1 > extent_limit:
                            break
                        profile.append((b2, t2, f2, k2))
                        yield from extend(profile, volume + size)
                        profile.pop()

    for t in range(0, top_limit + 1):
        for k in range(0, back_limit + 1):
            size = (t + 1) * (k + 1)
            if size > volume_limit or 1 + t + 1 + k + 1 > extent_limit:
                break
            yield from extend([(0, t, 0, k)], size)


# -- classifiers -------------------------------------------------------------

CLASSIFIERS: dict[str, Callable] = {
    "width_area": lambda p: (len(p), column_area(p)),
    "width_height": lambda p: (len(p), column_height(p)),
    "column_heights": lambda p: tuple(t - b + 1 for b, t in p),
    "width_volume": lambda p: (len(p), plateau_volume(p)),
    "width_height_depth": lambda p: (len(p),) + plateau_extents(p),
    "plateau_volumes": lambda p: tuple((t - b + 1) * (k - f + 1) for b, t, f, k in p),
}


def tally(stream: Iterable, key: str | Callable) -> dict:
    """Count profiles per classifier key; keys come back in sorted order."""
    classify = CLASSIFIERS[key] if isinstance(key, str) else key
    counts = Counter(classify(p) for p in stream)
    return dict(sorted(counts.items()))


# -- debug rendering ---------------------------------------------------------


def render_polyomino(profile: ColumnProfile) -> str:
    """Cell grid, top row first, ``#`` for a cell."""
    height = column_height(profile)
    lines = []
    for row in range(height - 1, -1, -1):
        lines.append("".join("#" if b <= row <= t else "." for b, t in profile))
    return "\n".join(lines)


def render_polycube(profile: PlateauProfile) -> str:
    """One grid per depth layer (front to back), rows top first, columns = width."""
    height, depth = plateau_extents(profile)
    blocks = []
    for layer in range(depth):
        lines = [f"layer {layer}:"]
        for row in range(height - 1, -1, -1):
            lines.append("".join(
                "#" if b <= row <= t and f <= layer <= k else "."
                for b, t, f, k in profile
            ))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
