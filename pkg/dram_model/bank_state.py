from dataclasses import dataclass
from enum import Enum
from typing import Optional

NEVER = -(10**9)


class Access(str, Enum):
    PAGE_HIT = "hit"
    PAGE_CLOSED = "closed"
    PAGE_MISS = "miss"


@dataclass
class BankState:
    # linha aberta; só vale enquanto nenhum refresh aconteceu desde a abertura
    open_row: Optional[int] = None
    opened_epoch: int = -1
    last_act: float = NEVER
    last_col: float = NEVER

    def row_open_at(self, epoch):
        if self.open_row is None or self.opened_epoch != epoch:
            return None
        return self.open_row
