import sympy

_acceptance = {}


def zeta_inverse_whitney(F):
    """Independent oracle: invert the zeta matrix of P_n built from the raw order rule.

    Returns (w_by_rank, mu_per_vertex) with exact integers.
    """
    n = len(F) - 1
    V = [(s, j) for s in range(n + 1) for j in range(1, F[s] + 1)]
    Z = sympy.zeros(len(V), len(V))
    for a, (t, s_) in enumerate(V):
        for b, (v, u) in enumerate(V):
            if t < v or (t == v and s_ == u):
                Z[a, b] = 1
    M = Z.inv()
    w = [0] * (n + 1)
    mu = {}
    for b, (v, u) in enumerate(V):
        w[v] += int(M[0, b])
        mu[v, u] = int(M[0, b])
    return w, mu


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    num = marker.args[0]
    prev = _acceptance.get(num, True)
    _acceptance[num] = prev and call.excinfo is None


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {num}: {'PASS' if _acceptance[num] else 'FAIL'}")
