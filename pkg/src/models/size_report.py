from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


CSV_COLUMNS = ["family", "k", "representation", "states", "colors", "residuals", "bound", "note"]


@dataclass(frozen=True)
class SizeRow:
    family: str
    k: int
    representation: str
    states: int
    colors: int
    residuals: Optional[int] = None
    bound: Optional[int] = None
    note: str = ""
    wall_ms: Optional[float] = None

    @property
    def sort_key(self):
        return (self.family, self.k, self.representation)

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data = {
            'family': self.family,
            'k': self.k,
            'representation': self.representation,
            'states': self.states,
            'colors': self.colors,
            'residuals': '' if self.residuals is None else self.residuals,
            'bound': '' if self.bound is None else self.bound,
            'note': self.note
        }
        if timing:
            data['wall_ms'] = '' if self.wall_ms is None else round(self.wall_ms, 1)
        return data


@dataclass
class SizeReport:
    """State/color/residual counts per construction, for table and CSV output"""
    title: str
    rows: List[SizeRow] = field(default_factory=list)

    def add(self, row: SizeRow):
        self.rows.append(row)

    def extend(self, rows: List[SizeRow]):
        self.rows.extend(rows)

    def sorted_rows(self) -> List[SizeRow]:
        return sorted(self.rows, key=lambda row: row.sort_key)

    def columns(self, timing: bool = False) -> List[str]:
        return CSV_COLUMNS + (["wall_ms"] if timing else [])

    def find(self, family: str, k: int, representation: str) -> Optional[SizeRow]:
        for row in self.rows:
            if row.sort_key == (family, k, representation):
                return row
        return None
