from .instances import Cnf2p2n, Graph, ReductionInstance
from .profile import Alternative, ApprovalVote, Committee, Profile
from .scoring import BivariateScoring, PairDomain, UnivariateScoring, pair_domain
