"""Test suite for the C-RAN fronthaul compression simulator."""
