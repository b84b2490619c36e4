"""
Command-line interface: click commands, run manifests, the certificate store
and replay.
"""
