from pathlib import Path

from ramanujan_pi.families import FamilyParams

GOLDEN = Path(__file__).parent / "golden" / "worked_examples.tex"


def worked_examples():
    """(params, latex) for every worked example formula."""
    out = []
    for line in GOLDEN.read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        head, latex = (s.strip() for s in line.split("|", 1))
        fam, *nums = head.split()
        nums = [int(x) for x in nums]
        out.append((FamilyParams(fam, *nums), latex))
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
