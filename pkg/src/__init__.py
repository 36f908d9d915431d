# Invariant Hilbert Series
