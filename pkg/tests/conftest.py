import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gapnet import concepts, network, text  # noqa: E402


def data_path(*parts) -> Path:
    return Path(str(resources.files("gapnet").joinpath("data", *parts)))


@pytest.fixture(scope="session")
def synthetic():
    """Tokenized bundled 500-sentence exposition, its index and filtration."""
    stop = text.default_stoplist()
    raw = text.read_document(data_path("synthetic_exposition.txt"))
    doc = text.preprocess(raw, stop, text.default_dictionary())
    index = concepts.extract_index(doc, stop, concepts.default_frequency_table())
    return doc, index, network.build_filtration(doc, index)


# (criterion number, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"AC{num}: {'PASS' if ok else 'FAIL'} - {detail}")
