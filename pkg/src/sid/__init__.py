"""System information decomposition for discrete three-variable systems."""
