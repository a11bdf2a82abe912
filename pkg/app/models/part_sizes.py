from dataclasses import dataclass
from typing import Any, Dict, Iterable, Tuple

from app.errors import ConstructionError

MAX_PART_TOTAL = 63


@dataclass(frozen=True)
class PartSizes:
    """
    Ordered part sizes (b_1, ..., b_r) of a multipartite construction.

    The given order is kept because the near-Turan family singles out
    b_1 and b_2; ``normalized()`` gives the non-decreasing form.
    """
    sizes: Tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(b) for b in self.sizes)
        object.__setattr__(self, 'sizes', sizes)
        if len(sizes) < 2:
            raise ConstructionError(f"At least two parts are required, got {list(sizes)}")
        if any(b < 1 for b in sizes):
            raise ConstructionError(f"Part sizes must be positive, got {list(sizes)}")
        if sum(sizes) > MAX_PART_TOTAL:
            raise ConstructionError(f"Part sizes sum to {sum(sizes)}, limit is {MAX_PART_TOTAL}")

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __getitem__(self, index):
        return self.sizes[index]

    def __str__(self):
        return ','.join(str(b) for b in self.sizes)

    @classmethod
    def of(cls, sizes: Iterable[int]) -> 'PartSizes':
        return cls(tuple(sizes))

    @classmethod
    def parse(cls, text: str) -> 'PartSizes':
        try:
            return cls(tuple(int(item) for item in text.replace(' ', '').split(',') if item))
        except ValueError as e:
            if isinstance(e, ConstructionError):
                raise
            raise ConstructionError(f"Cannot parse part sizes: {text!r}") from e

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def normalized(self) -> 'PartSizes':
        return PartSizes(tuple(sorted(self.sizes)))

    def edge_count(self) -> int:
        total = self.total
        return (total * total - sum(b * b for b in self.sizes)) // 2

    def to_dict(self) -> Dict[str, Any]:
        return {'sizes': list(self.sizes)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PartSizes':
        return cls(tuple(data['sizes']))
