"""Collection of unit tests for the adapter domain layer."""
