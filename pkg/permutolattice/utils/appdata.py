import os
import sys

APP_NAME = "Permutolattice"


def get_appdata_dir(create: bool = False) -> str:
    """
    Returns the absolute path to the application's data directory.
    %APPDATA% on Windows, ~/.config elsewhere. The directory is only
    created when `create` is set.
    """
    if sys.platform == 'win32':
        appdata = os.getenv('APPDATA')
        if not appdata:
            appdata = os.path.expanduser('~')
    else:
        appdata = os.getenv('XDG_CONFIG_HOME') or os.path.expanduser('~/.config')

    app_dir = os.path.join(appdata, APP_NAME)

    if create and not os.path.exists(app_dir):
        os.makedirs(app_dir, exist_ok=True)

    return app_dir
