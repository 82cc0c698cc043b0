import os
import tempfile

# keep the suite away from the user's config file; must run before the package is imported
os.environ["PERMUTOLATTICE_CONFIG"] = os.path.join(tempfile.mkdtemp(prefix="permutolattice-"), "config.json")

import pytest

from permutolattice.core.geometry import Arrangement
from permutolattice.formats import read_plc

from .helpers import data_path


@pytest.fixture(scope="session")
def intro_spec():
    return read_plc(data_path("intro.plc"))


@pytest.fixture(scope="session")
def intro_arrangement(intro_spec):
    return Arrangement(intro_spec.functionals, intro_spec.domain)
