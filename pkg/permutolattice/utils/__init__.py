from .appdata import get_appdata_dir
from .helpers import is_truthy, parse_rational, format_rational
