# Services composing the diagonal library for the CLI
