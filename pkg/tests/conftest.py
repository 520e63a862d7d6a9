import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS, format_line

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in RESULTS:
        terminalreporter.write_line(format_line(result))
