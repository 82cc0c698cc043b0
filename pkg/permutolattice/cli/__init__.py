from .app import build_parser, run
