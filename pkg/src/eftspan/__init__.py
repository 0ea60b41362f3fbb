"""Edge-fault-tolerant greedy spanners, strong blocking sets and path census."""

from .blocking import (StrongBlockingSet, extract_blocking_set, reduce_block_frequency,
                       verify_strong_blocking)
from .census import (PathRecord, build_choke_set, check_dispersion, count_paths,
                     find_alternating_kpath, is_blocked, random_edge_subsample,
                     split_high_degree)
from .faults import approx_fault_decision, exact_fault_decision
from .generators import blow_up, gen_random, gen_regular
from .graph import (INF, WeightedGraph, enumerate_cycles, girth, hop_distance,
                    weighted_distance)
from .greedy import GreedyTrace, SpannerResult, ft_greedy_approx, ft_greedy_exact
from .verify import Violation, verify_eft

__version__ = "0.1.0"
