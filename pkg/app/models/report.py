from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

EMPTY_CLASS = 'empty_class'
OUT_OF_DOMAIN = 'out_of_domain'
VACUOUS = 'vacuous'


@dataclass
class ReportRow:
    """One checked instance of a catalog theorem"""
    theorem: str
    n: int
    r: Optional[int] = None
    param: Optional[float] = None
    found: Optional[float] = None
    expected: Optional[float] = None
    witnesses: List[str] = field(default_factory=list)
    unique: bool = False
    passed: bool = False
    flags: List[str] = field(default_factory=list)
    note: str = ''

    @property
    def counted(self) -> bool:
        """Rows for empty classes or outside the theorem's range carry no verdict"""
        return EMPTY_CLASS not in self.flags and OUT_OF_DOMAIN not in self.flags

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theorem': self.theorem,
            'n': self.n,
            'r': self.r,
            'param': self.param,
            'found': self.found,
            'expected': self.expected,
            'witnesses': list(self.witnesses),
            'unique': self.unique,
            'pass': self.passed,
            'flags': list(self.flags),
            'note': self.note,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ReportRow':
        return cls(
            theorem=data['theorem'], n=int(data['n']), r=data.get('r'), param=data.get('param'),
            found=data.get('found'), expected=data.get('expected'),
            witnesses=list(data.get('witnesses', [])), unique=bool(data.get('unique', False)),
            passed=bool(data.get('pass', False)), flags=list(data.get('flags', [])),
            note=data.get('note', ''),
        )


@dataclass
class VerificationReport:
    theorem: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    rows: List[ReportRow] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return not self.rows

    @property
    def passed(self) -> bool:
        """
        No rows: vacuous pass. Otherwise at least one counted row, and every
        counted row passes.
        """
        if self.vacuous:
            return True
        counted = [row for row in self.rows if row.counted]
        return bool(counted) and all(row.passed for row in counted)

    @property
    def warnings(self) -> List[str]:
        result = []
        if self.vacuous:
            result.append(VACUOUS)
        elif not any(row.counted for row in self.rows):
            result.append('no_counted_rows')
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theorem': self.theorem,
            'parameters': dict(self.parameters),
            'rows': [row.to_dict() for row in self.rows],
            'pass': self.passed,
            'warnings': self.warnings,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        return cls(theorem=data['theorem'], parameters=dict(data.get('parameters', {})),
                   rows=[ReportRow.from_dict(row) for row in data.get('rows', [])])
