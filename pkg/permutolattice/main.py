import logging
import os
import sys

from .cli import run
from .core.configuration import config
from .utils.helpers import is_truthy


def setup_logging(verbose: bool = False):
    debug_env = is_truthy(os.environ.get("PERMUTOLATTICE_DEBUG", ""))
    debug_cfg = config.get_bool("debug", False)
    if debug_env or debug_cfg or verbose:
        logging.disable(logging.NOTSET)
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    else:
        logging.disable(logging.CRITICAL)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    # --verbose is only known once argparse has accepted the command line
    sys.exit(run(argv, on_parsed=setup_logging))


if __name__ == "__main__":
    main()
