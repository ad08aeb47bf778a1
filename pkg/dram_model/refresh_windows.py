class RefreshSchedule:
    """Janelas de refresh [k*refi, k*refi + rfc) para k >= 1, em ciclos."""

    def __init__(self, refi_cycles, rfc_cycles):
        self.refi = refi_cycles
        self.rfc = rfc_cycles

    def epoch(self, cycle):
        # quantas janelas já começaram até `cycle`
        return int(cycle // self.refi)

    def window_end(self, cycle):
        """Fim da janela que contém `cycle`, ou None se o ciclo está fora de refresh."""
        k = int(cycle // self.refi)
        if k >= 1 and cycle < k * self.refi + self.rfc:
            return k * self.refi + self.rfc
        return None

    def end_of_window(self, k):
        return k * self.refi + self.rfc

    def windows(self, up_to):
        out = []
        k = 1
        while k * self.refi <= up_to:
            out.append((k * self.refi, k * self.refi + self.rfc))
            k += 1
        return out


def refresh_windows(params, up_to):
    """Lista de janelas (início, fim) em ciclos que começam até `up_to`."""
    return RefreshSchedule(params.refi_cycles, params.rfc_cycles).windows(up_to)
