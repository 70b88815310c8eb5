# Monodromy Module
