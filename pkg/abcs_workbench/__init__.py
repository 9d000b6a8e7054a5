from .dimacs import CNF, COL
from .model import BivariateScoring, Committee, Profile, UnivariateScoring
from .prf import PRF
from .rul import RUL, resolve_rule
from .rules import abcs_winners, seq_winners, verify_abcs_winner, verify_seq_winner
from .solvers import erm_abcs, erm_seq, pac_experiment, target_abcs, target_seq_thiele
from .util import read_file
from .version import __version__
