# Hurwitz Module
