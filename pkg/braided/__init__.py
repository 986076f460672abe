# Braided vector spaces, set-theoretic solutions and racks
