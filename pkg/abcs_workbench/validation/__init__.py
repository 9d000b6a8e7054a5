from .validation import _validate_config, _validate_parameter, _validate_vote_law
