from typing import NamedTuple

from addrmap import decode, encode
from dram_model.bank_state import NEVER, Access, BankState
from dram_model.refresh_windows import RefreshSchedule
from helpers.errors import SimulationError

NUM_BANK_GROUPS = 4
BANKS_PER_GROUP = 4


class ServiceResult(NamedTuple):
    completion_cycle: float
    classification: Access


class PseudoChannel:
    """
    Máquina de estados de um pseudo canal: row buffer por banco, ACT/PRE/CAS,
    restrições t_ccd entre bank groups, refresh periódico e ocupação do barramento.

    Comandos de coluna saem em ordem; PRE/ACT de uma transação podem começar
    assim que ela chega ao canal, limitados só pelo próprio banco. Um row miss
    num banco que a transação anterior acabou de ler espera t_rtp depois da
    última coluna dela.
    """

    def __init__(self, policy, timing):
        if timing.bus_bytes_per_cycle != policy.kind.bus_bytes_per_cycle:
            raise SimulationError(
                f"Barramento de {timing.bus_bytes_per_cycle} B/ciclo não combina com {policy.kind}"
            )
        self.policy = policy
        self.timing = timing
        self.capacity = policy.kind.capacity_bytes
        self.banks = [[BankState() for _ in range(BANKS_PER_GROUP)] for _ in range(NUM_BANK_GROUPS)]
        self.now = 0
        self.last_column_cmd = [NEVER] * NUM_BANK_GROUPS
        self.last_column_any = NEVER
        self.prev_banks = frozenset()
        self.prev_last_col = NEVER
        self.bus_free_at = 0.0
        self.refresh = RefreshSchedule(timing.refi_cycles, timing.rfc_cycles)
        self.last_refresh_stall = 0
        self.last_classification = None
        self.access_counts = {access.value: 0 for access in Access}
        self.column_cycles = []
        self.record_columns = False

    def bank(self, coords):
        return self.banks[coords.bank_group][coords.bank]

    def classify_access(self, coords, cycle=None):
        """Classifica o acesso como page hit, page closed ou page miss no ciclo dado."""
        cycle = self.now if cycle is None else cycle
        open_row = self.bank(coords).row_open_at(self.refresh.epoch(cycle))
        if open_row is None:
            return Access.PAGE_CLOSED
        if open_row == coords.row:
            return Access.PAGE_HIT
        return Access.PAGE_MISS

    def service_read(self, coords, burst_bytes, issue_cycle):
        return self._service(coords, burst_bytes, issue_cycle)

    def service_write(self, coords, burst_bytes, issue_cycle):
        # escrita usa as mesmas restrições de banco/barramento/refresh que a leitura
        return self._service(coords, burst_bytes, issue_cycle).completion_cycle

    def _service(self, coords, burst_bytes, issue_cycle):
        t = self.timing
        if issue_cycle < self.now:
            raise SimulationError(f"Transação emitida no ciclo {issue_cycle} < now={self.now}")
        if burst_bytes <= 0 or burst_bytes % t.bus_bytes_per_cycle:
            raise SimulationError(
                f"Burst de {burst_bytes} B não é múltiplo de {t.bus_bytes_per_cycle} B"
            )
        self.now = issue_cycle

        beats = burst_bytes // t.bus_bytes_per_cycle
        base = encode(self.policy, coords) if beats > 1 else 0
        classification = None
        stall = 0
        data = issue_cycle
        conflict_release = self.prev_last_col + t.t_rtp
        touched = set()
        for beat in range(beats):
            if beat == 0:
                beat_coords = coords
            else:
                addr = (base + beat * t.bus_bytes_per_cycle) % self.capacity
                beat_coords = decode(self.policy, addr)
            col, access, beat_stall = self._schedule_column(beat_coords, issue_cycle, conflict_release)
            if classification is None:
                classification = access
            stall = max(stall, beat_stall)
            touched.add((beat_coords.bank_group, beat_coords.bank))
            data = max(col + t.t_cas, self.bus_free_at)
            self.bus_free_at = data + 1
        self.bus_free_at += t.efficiency_overhead
        self.prev_banks = frozenset(touched)
        self.prev_last_col = col
        # uma contagem por transação, pela classe do primeiro beat
        self.access_counts[classification.value] += 1
        self.last_refresh_stall = stall
        self.last_classification = classification
        return ServiceResult(completion_cycle=data, classification=classification)

    def _schedule_column(self, coords, arrival, conflict_release):
        t = self.timing
        bank = self.bank(coords)
        bg = coords.bank_group
        conflict = (bg, coords.bank) in self.prev_banks
        start = arrival
        stall = 0
        while True:
            window_end = self.refresh.window_end(start)
            if window_end is not None:
                stall += window_end - start
                start = window_end
            epoch = self.refresh.epoch(start)
            open_row = bank.row_open_at(epoch)

            act = None
            if open_row is None:
                access = Access.PAGE_CLOSED
                act = start
                col = act + t.t_rcd
            elif open_row == coords.row:
                access = Access.PAGE_HIT
                col = start
            else:
                access = Access.PAGE_MISS
                pre = max(start, bank.last_act + t.t_ras, bank.last_col + 1)
                if conflict:
                    pre = max(pre, conflict_release)
                act = pre + t.t_rp
                col = act + t.t_rcd

            col = max(col, self.last_column_any + t.ccd_s_cycles, self.last_column_cmd[bg] + t.ccd_l_cycles)
            if self.refresh.epoch(col) == epoch:
                break
            # um refresh começou antes da coluna: fecha tudo e recomeça depois dele
            restart = self.refresh.end_of_window(epoch + 1)
            stall += restart - start
            start = restart

        if act is not None:
            bank.open_row = coords.row
            bank.opened_epoch = epoch
            bank.last_act = act
        bank.last_col = col
        self.last_column_any = col
        self.last_column_cmd[bg] = col
        if self.record_columns:
            self.column_cycles.append(col)
        return col, access, stall
