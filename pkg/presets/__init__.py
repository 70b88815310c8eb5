# Presets Module
