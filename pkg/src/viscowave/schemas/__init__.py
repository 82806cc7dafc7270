"""JSON schema documents shipped with the package."""
