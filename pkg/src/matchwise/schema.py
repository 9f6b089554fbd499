"""Version tag for machine-readable report formats (see SCHEMA.md)."""

SCHEMA_VERSION = "1"
