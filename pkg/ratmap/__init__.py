# Rational Map Module
