"""Published table of P_n, Q_n for n = 1..18, transcribed term by term.

Each entry maps exponent -> coefficient exactly as printed.  Row 14's Q
column prints ``4228 z^5``; the recurrence gives ``42 z^5`` (the printed
value appears to have picked up stray digits).  :data:`KNOWN_ERRATA`
records that cell so comparisons can classify it instead of failing.
"""

from __future__ import annotations

PRINTED: dict[int, tuple[dict[int, int], dict[int, int]]] = {
    1: ({}, {0: 1}),
    2: ({1: 1}, {}),
    3: ({0: 1}, {1: 1}),
    4: ({2: 1}, {0: 2}),
    5: ({1: 4}, {2: 1}),
    6: ({0: 4, 3: 1}, {1: 6}),
    7: ({2: 9}, {0: 10, 3: 1}),
    8: ({1: 28, 4: 1}, {2: 12}),
    9: ({0: 28, 3: 16}, {1: 52, 4: 1}),
    10: ({2: 100, 5: 1}, {0: 80, 3: 20}),
    11: ({1: 280, 4: 25}, {2: 160, 5: 1}),
    12: ({0: 280, 3: 260, 6: 1}, {1: 600, 4: 30}),
    13: ({2: 1380, 5: 36}, {0: 880, 3: 380, 6: 1}),
    14: ({1: 3640, 4: 560, 7: 1}, {2: 2520, 5: 4228}),
    15: ({0: 3640, 3: 4760, 6: 49}, {1: 8680, 4: 770, 7: 1}),
    16: ({2: 22960, 5: 1064, 8: 1}, {0: 12320, 3: 7840, 6: 56}),
    17: ({1: 58240, 4: 13160, 7: 64}, {2: 46480, 5: 1400, 8: 1}),
    18: ({0: 58240, 3: 99120, 6: 1848, 9: 1}, {1: 151200, 4: 20160, 7: 72}),
}

#: (n, column, exponent) -> (printed, recurrence value)
KNOWN_ERRATA: dict[tuple[int, str, int], tuple[int, int]] = {
    (14, "Q", 5): (4228, 42),
}
