import pytest

CRITERIA = {
    1: "tree minima vs closed form, n 7..12",
    2: "unicyclic minima and coefficient adjudication, n 5..12",
    3: "transformation sites strictly decrease the index",
    4: "chemical minima vs printed constants",
    5: "enumeration counts vs independent oracles",
    6: "constructors vs closed forms, n <= 20",
    7: "majorization checker",
    8: "structural claims on every minimizer",
}

_KEY = pytest.StashKey[dict]()


@pytest.fixture(scope="session")
def record(request):
    """Store one acceptance outcome; printed in the terminal summary."""
    results = request.config.stash.setdefault(_KEY, {})

    def _record(criterion: int, ok: bool, detail: str) -> None:
        results[criterion] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_KEY, None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k, title in CRITERIA.items():
        if k in results:
            ok, detail = results[k]
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k}. {title}: {detail}")
        else:
            terminalreporter.write_line(f"[FAIL] {k}. {title}: not run to completion")
