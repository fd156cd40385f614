# Keeps tests/ importable as top-level modules (for oracles.py).
