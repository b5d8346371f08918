"""Subcommands of the fishlab command line, discovered at start-up."""
