import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the slow rank-24 criteria",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: opt-in rank-24 work (enable with --runslow)")
    config._criterion_lines = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def criterion_log(request):
    lines = request.config._criterion_lines

    def log(line: str) -> None:
        lines.append(line)

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
