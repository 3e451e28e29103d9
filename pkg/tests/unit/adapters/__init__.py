"""Collection of unit test fot the adapters layer."""
