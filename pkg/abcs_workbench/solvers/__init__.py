from .erm import LabeledSample, erm_abcs, erm_seq, label_samples, training_consistent, winners_under
from .pac import PacConfig, PacReport, VoteSizeLaw, pac_experiment, sample_profile
from .target import SeqTargetResult, find_seq_witness, target_abcs, target_seq_thiele
