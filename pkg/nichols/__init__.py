# Quantum symmetrizers and graded dimensions of Nichols algebras
