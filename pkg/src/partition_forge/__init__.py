"""Exact combinatorics of partitions, growth diagrams and cylindric identities."""
