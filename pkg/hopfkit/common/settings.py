from typing import NamedTuple


class AnalysisSettings(NamedTuple):
    """
    Defaults shared by the structure and order computations. Callers override single
    fields with ``settings._replace(...)``, as ``antipode_order`` does for its cutoff.
    """
    cutoff: int = 10000
    orbit_depth: int = 8
    confluence_depth: int = 6
    claim_horizon: int = 5
    inverse_search_limit: int = 64

    def length_cap(self, bound: int) -> int:
        return 2 * bound + 4


DEFAULT_SETTINGS = AnalysisSettings()
