"""Shared fixtures and frozen reference values.

The ``FROZEN`` numbers were produced once with mpmath at 40 digits
(tanh-sinh quadrature on the defining integrals, ``findroot`` for
inverses and moduli, ``ellipk``/``ellipe`` for the classical case).  They
do not depend on any code in this package.
"""

from __future__ import annotations

import math

import pytest

FROZEN = {
    # complete and incomplete integrals
    "K1_p1.5_q0.5": 2.2907929713347016078,
    "E2_p3_x0.3_q0.7": 0.29854359670163967242,
    "E2c_p3_q0.7": 1.4217021934075748224,
    "E2_p3_xpi+0.3_q0.7": 3.1419479835167893172,
    # root of F2_{3/2}(a, 0.6) = 2
    "am2_p1.5_x2_q0.6": 1.7064773083638142608,
    # K_p(1) and E_{1,p}(1)
    "Kp1": {3: 3.6429759718313544622, 4: 2.6220575542921198105, 6: 2.1032731579881813918, 10: 1.8395469902029404109},
    "E1p1": {3: 0.91074399295784310443, 4: 0.87401918476403993682, 6: 0.84130926319527255671, 10: 0.81757644009019573816},
    "sech_1.5_10": 0.0036078657388614885569,
    # figure-eight moduli
    "qstar": {1.2: 0.78928334229138307066, 1.5: 0.85522456127385172395, 2: 0.90890855754854147824,
              3: 0.95198603746460607966, 10: 0.99316678726426133448},
    "X2p_2_0.5": -0.06055480897275505642,
}

P_GRID = (6 / 5, 4 / 3, 3 / 2, 2.0, 3.0, 4.0, 6.0)


@pytest.fixture(scope="session")
def frozen():
    return FROZEN


def beta_cos_integral(a: float) -> float:
    """``int_0^{pi/2} cos^a`` via the Beta function (``a > -1``)."""
    return 0.5 * math.sqrt(math.pi) * math.gamma((a + 1) / 2) / math.gamma(a / 2 + 1)


# one line per acceptance criterion, repeated at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
