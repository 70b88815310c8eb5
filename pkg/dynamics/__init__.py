# Dynamics Module
