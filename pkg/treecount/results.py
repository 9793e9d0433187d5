from dataclasses import dataclass, field
from typing import Optional

from treecount.exceptions import InconsistentResult
from treecount.factors import evaluate


@dataclass(frozen=True)
class KappaResult:
    value: int
    method: str
    factors: Optional[tuple] = None
    notes: tuple = ()
    engines: dict = field(default_factory=dict)
    engines_agreed: Optional[bool] = None

    def __post_init__(self):
        if self.value < 0:
            raise InconsistentResult(f'Negative tree-number {self.value} from {self.method}')
        if self.factors is not None and self.value and evaluate(self.factors) != self.value:
            raise InconsistentResult(f'Factorization from {self.method} does not multiply back to the value')

    @property
    def is_disconnected(self) -> bool:
        return 'disconnected' in self.notes
