from dram_model.timing_params import TimingParams, TIMING_PRESETS, DEFAULT_TIMING_PRESET, timing_preset
from dram_model.bank_state import Access, BankState
from dram_model.refresh_windows import RefreshSchedule, refresh_windows
from dram_model.pseudo_channel import PseudoChannel, ServiceResult
