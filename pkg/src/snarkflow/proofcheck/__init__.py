"""Proof-checking package (configurations, types, discharging, audits)."""
