"""Q-index sufficient conditions for generalized toughness: exact computation and verification."""
