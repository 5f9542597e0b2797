import os  # noqa (forward references)
import typing

import numpy as np
import numpy.typing as npt

ARRAY_ALIAS = npt.NDArray[np.float64]
INDEX_ARRAY_ALIAS = npt.NDArray[np.int64]
ARRAY_LIKE_ALIAS = typing.Union[typing.Sequence[float], ARRAY_ALIAS]
PHI_FN_ALIAS = typing.Callable[[ARRAY_ALIAS], ARRAY_ALIAS]
NUMBER_MAP_ALIAS = typing.Dict[str, float]
PATH_ALIAS = typing.Union[str, "os.PathLike[str]"]
SHOOTING_HOOK_ALIAS = typing.Optional[typing.Callable[[int, float, float], typing.Any]]
