import sys


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.REPORT):
        terminalreporter.write_line(acceptance.REPORT[number])
