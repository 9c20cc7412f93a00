import numpy as np


def ragged_arange(starts: np.ndarray, stops: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Concatenate ``arange(starts[k], stops[k])`` over ``k``.

    Returns ``(group, values)`` where ``group[n]`` is the ``k`` that produced
    ``values[n]``. Empty ranges contribute nothing.
    """
    starts = np.asarray(starts, dtype=np.int64)
    stops = np.asarray(stops, dtype=np.int64)
    lengths = np.maximum(stops - starts, 0)
    group = np.repeat(np.arange(lengths.size), lengths)
    offsets = np.arange(group.size) - np.repeat(np.cumsum(lengths) - lengths, lengths)
    return group, starts[group] + offsets
