# Explicit braided vector spaces and set-theoretic solutions, with their twists and verdicts
