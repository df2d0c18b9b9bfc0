import pytest

from chebotarev.profiles import profile

# Acceptance results: criterion -> (title, [(part, ok, detail)]), printed at the end of the run.
ACCEPTANCE: dict[int, tuple[str, list[tuple[str, bool, str]]]] = {}


def record(criterion: int, title: str, part: str, ok: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, (title, []))[1].append((part, ok, detail))


def acceptance_lines() -> list[str]:
    lines = []
    for n in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[n]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        body = "; ".join(f"{part} {'ok' if ok else 'FAILED'} ({detail})" for part, ok, detail in parts)
        lines.append(f"criterion {n} [{title}]: {verdict}: {body}")
    return lines


@pytest.fixture(scope="session")
def p9():
    return profile(9, "2.29e7")


@pytest.fixture(scope="session")
def p2():
    return profile(2, "400000")


def pytest_terminal_summary(terminalreporter):
    lines = acceptance_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
