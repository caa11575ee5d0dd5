def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS  # noqa: E402

    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(VERDICTS):
        ok, what = VERDICTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {what}")
