"""Records of exact results that disagree with printed reference values."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, List


@dataclass(frozen=True)
class Divergence:
    location: str
    paper_value: str
    derived_value: str
    category: str = "misc"

    def to_dict(self) -> dict:
        return asdict(self)


def to_json(entries: Iterable[Divergence]) -> str:
    return json.dumps([e.to_dict() for e in entries], indent=2, ensure_ascii=False)


def dedupe(entries: Iterable[Divergence]) -> List[Divergence]:
    seen, out = set(), []
    for e in entries:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out
