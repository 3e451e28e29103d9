"""Collection of unit tests for the infrastructure adapters layer."""
