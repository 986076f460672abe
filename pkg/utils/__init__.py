# Literal parsing, JSON formats, result cache and text tables
