import sys
from pathlib import Path

import pytest

# Make sibling helper modules (oracle, synth, golden_vtt) importable
# regardless of how pytest resolves rootdir.
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def fixture_dir() -> Path:
    return Path(__file__).parent / "fixtures"
