from .graph_reductions import (
    brute_independent_set,
    cc_reduction_report,
    check_cc_reduction,
    check_is_reduction,
    forced_rule,
    is_reduction_report,
    pad_graph,
    reduce_is_to_cc_verification,
    reduce_is_to_target_abcs,
    small_graphs,
)
from .parsers import emit_cnf, emit_graph, parse_cnf, parse_graph
from .sat_reductions import (
    brute_sat,
    check_sat_reduction,
    enumerate_2p2n,
    reduce_sat_to_seqcc_verification,
    reduce_sat_to_target_seq,
    sat_reduction_report,
)
