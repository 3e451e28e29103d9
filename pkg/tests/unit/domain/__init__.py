"""Collection of unit tests for domain logic."""
