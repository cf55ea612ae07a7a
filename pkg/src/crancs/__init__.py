"""Distributed fronthaul compression and joint sparse recovery for uplink C-RAN."""

__version__ = "0.1.0"
