# Exact arithmetic package
