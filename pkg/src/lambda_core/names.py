"""표시용 변수 이름 공급기.

내부 표현은 이름이 없으므로 이름은 출력할 때만 결정론적으로 만든다.
순서: x, y, z, w, u, v, 그 다음 x1, x2, ...
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator

BASE_NAMES: tuple[str, ...] = ("x", "y", "z", "w", "u", "v")

NAME_PATTERN = re.compile(r"[a-z][a-z0-9_]*")


def fresh_names(avoid: Iterable[str] = ()) -> Iterator[str]:
    """avoid에 없는 이름을 정해진 순서로 끝없이 생성한다.

    Args:
        avoid: 이미 쓰이고 있어 건너뛸 이름들

    Yields:
        새 변수 이름
    """
    taken = set(avoid)
    candidates = itertools.chain(BASE_NAMES, (f"x{i}" for i in itertools.count(1)))
    for name in candidates:
        if name not in taken:
            taken.add(name)
            yield name


def default_context(size: int) -> tuple[str, ...]:
    """길이 size의 기본 문맥 이름을 만든다."""
    return tuple(itertools.islice(fresh_names(), size))


def is_valid_name(name: str) -> bool:
    return NAME_PATTERN.fullmatch(name) is not None
