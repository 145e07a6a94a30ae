import warnings

import pytest

from designiso import boolean_sqs, complete_design, fano, pasch_switch, sts

ACCEPTANCE: list[str] = []


def corpus():
    """The named designs used across the suite."""
    return {
        "fano": fano(),
        "sts9": sts(9),
        "sts13": sts(13),
        "sts15": sts(15),
        "sts19": sts(19),
        "sts21": sts(21),
        "sqs8": boolean_sqs(3),
        "sqs16": boolean_sqs(4),
        "complete632": complete_design(6, 3, 2),
    }


@pytest.fixture(scope="session")
def designs():
    return corpus()


@pytest.fixture(autouse=True)
def _quiet_rands_warning():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message=r"v = \d+ < f\(k,t,1\)")
        yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
