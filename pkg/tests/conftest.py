def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
    missing = [n for n in range(1, 11) if n not in RESULTS]
    if missing:
        terminalreporter.write_line(f"not run: {missing}")
