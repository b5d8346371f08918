"""
fishlab tests.

One package per library package; ``commands`` drives the CLI in-process.
"""
