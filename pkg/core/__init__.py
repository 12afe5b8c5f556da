from .errors import AnalysisDomainError, ContractViolation
from .instrument import ComparisonCounter, CountingElement, EventTally, SortStats, linear_coefficient
from .inputs import Distribution, InputSpec, XorShift64Star, gen_input
from .selection import EqualSide, PartitionResult, UndersamplingConfig, choose_pivot_sampled, mom_select, partition
from .sorter import (
    Algorithm,
    HybridConfig,
    Mode,
    SortConfig,
    introsort_with_mqms,
    quicksort_median_of_three,
    sort,
    sort_bmqms,
    sort_hqms,
    sort_mqms,
    sort_umqms,
)
