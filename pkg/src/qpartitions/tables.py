"""Golden reference data: worked tables embedded verbatim.

Triangular count tables are stored as ``{n: [value for k=1..]}`` with
blank cells as 0.  Partition tables are lists of row tuples of
partition literals.  Known misprints live in ``ERRATA`` and never
overwrite the printed value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition


def _rows(text: str) -> dict[int, list[int]]:
    out = {}
    for line in text.strip().splitlines():
        head, *cells = line.split("&")
        out[int(head)] = [int(c) if c.strip() else 0 for c in cells]
    return out


def _strip(row: list[int]) -> list[int]:
    while row and row[-1] == 0:
        row = row[:-1]
    return row


# (s, n) -> rows of (modular, duplicate, congruent) literals
BIJECTION_TABLES: dict[tuple[int, int], list[tuple[str, str, str]]] = {
    (4, 10): [
        ("10", "10", "5^2"),
        ("8,2", "8,2", "8,1^2"),
        ("7,2,1", "7,2,1", "7,1^3"),
        ("6,4", "6,4", "4,3^2"),
        ("6,3,1", "6,3,1", "3^3,1"),
        ("5,1^5", "5,2^2,1", "5,1^5"),
        ("4,3,2,1", "4,3,2,1", "4,3,1^3"),
        ("6,1^4", "6,2^2", "3^2,1^4"),
        ("4,2,1^4", "4,2^3", "4,1^6"),
        ("3,2,1^5", "3,2^3,1", "3,1^7"),
        ("2,1^8", "4^2,2", "1^10"),
        ("2^5", "2^5", "4^2,1^2"),
        ("5,1^5", "5,2^2,1", "5,1^5"),
        ("9,1", "9,1", "9,1"),
        ("5,4,1", "5,4,1", "5,4,1"),
        ("7,3", "7,3", "7,3"),
    ],
    (8, 18): [
        ("9,1^9", "9,4^2,1", "9,1^9"),
        ("2^9", "4^4,2", "8^2,1^2"),
        ("8,2,1^8", "8,4^2,2", "8,1^10"),
        ("7,3,1^8", "7,4^2,3", "7,3,1^8"),
        ("7,2,1^9", "7,4^2,2,1", "7,1^11"),
        ("10,1^8", "10,4^2", "5^2,1^8"),
        ("5,3,2,1^8", "5,4^2,3,2", "5,3,1^10"),
        ("5,4,1^9", "5,4^3,1", "5,1^13"),
        ("6,3,1^9", "6,4^2,3,1", "3^3,1^9"),
        ("6,4,1^8", "6,4^3", "3^2,1^12"),
        ("4,3,2,1^9", "4^3,3,2,1", "3,1^15"),
        ("2,1^16", "8^2,2", "1^18"),
    ],
    (6, 18): [
        ("12,1^6", "12,3^2", "12,3^2"),
        ("10,2,1^6", "10,3^2,2", "5^2,3^2,1^2"),
        ("9,3,1^6", "9,3^3", "9,3^3"),
        ("8,4,1^6", "8,4,3^2", "3^2,1^12"),
        ("5,4,3,1^6", "5,4,3^3", "5,3^3,1^4"),
        ("11,1^7", "11,3^2,1", "11,3^2,1"),
        ("8,3,1^7", "8,3^3,1", "3^3,1^9"),
        ("5,4,2,1^7", "5,4,3^2,2,1", "5,3^2,1^7"),
        ("6,1^12", "6,3^4", "6,3^4"),
        ("5,1^13", "5,3^4,1", "5,3^4,1"),
        ("4,2,1^12", "4,3^4,2,1", "3^4,1^6"),
        ("1^18", "3^6", "3^6"),
        ("6,2^6", "6^3", "6^3"),
        ("5,2^6,1", "6^2,5,1", "6^2,5,1"),
        ("4,2^7", "6^2,4,2", "6^2,1^6"),
        ("3,2^7,1", "6^2,3,2,1", "6^2,3,1^3"),
        ("3^6", "9^2", "9^2"),
        ("16,2", "16,2", "1^18"),
        ("14,4", "14,4", "7^2,1^4"),
    ],
    (10, 15): [
        ("14,1", "14,1", "7^2,1"),
        ("12,3", "12,3", "3^5"),
        ("12,2,1", "12,2,1", "3^4,1^3"),
        ("8,6,1", "8,6,1", "3^2,1^9"),
        ("8,5,2", "8,5,2", "5,1^10"),
        ("8,4,2,1", "8,4,2,1", "1^15"),
        ("7,6,2", "7,6,2", "7,3^2,1^2"),
        ("6,5,4", "6,5,4", "5,3^2,1^4"),
        ("6,5,3,1", "6,5,3,1", "5,3^3,1"),
        ("6,4,3,2", "6,4,3,2", "3^3,1^6"),
        ("3,2,1^10", "5^2,3,2", "5^2,3,1^2"),
        ("4,1^11", "5^2,4,1", "5^2,1^5"),
        ("5,4,3,2,1", "5,4,3,2,1", "5,3,1^7"),
        ("7,4,3,1", "7,4,3,1", "7,3,1^5"),
    ],
}


MODULAR4_NK = _rows("""
1 &1
2 &1
3 &1&1
4 &1&1&&1
5 &1&2&&&1
6 &1&2&1&&1
7 &1&3&1&&1&1
8 &1&3&2&1&1&1&&1
9 &1&4&3&&2&2&&&1
10 &1&4&4&1&2&2&1&&1
11 &1&5&5&1&2&4&1&&1&1
12 &1&5&7&3&2&4&2&1&1&1&&1
13 &1&6&8&3&3&6&3&&2&2&&&1
14 &1&6&10&5&3&6&5&1&2&2&1&&1
15 &1&7&12&6&4&9&6&1&2&4&1&&1&1
16 &1&7&14&10&4&9&9&&2&4&2&1&1&1
17 &1&8&16&11&5&13&11&3&4&8&1&&2&2
18 &1&8&19&15&7&12&15&6&4&6&5&1&2&2&1
19 &1&9&21&18&9&16&18&7&5&10&6&1&2&4&1
20 &1&9&24&24&11&16&23&13&5&10&9&4&2&4&2
""")

CONGRUENT4_NK = _rows("""
1 &1
2 &&1
3 &1&&1
4 &1&1&&1
5 &1&1&1&&1
6 &&2&1&1&&1
7 &1&1&2&1&1&&1
8 &1&3&1&2&1&1&&1
9 &1&2&4&1&2&1&1&&1
10 &&3&3&4&1&2&1&1&&1
11 &1&2&5&3&4&1&2&1&1&&1
12 &1&4&4&6&3&4&1&2&1&1&&1
13 &1&3&7&5&6&3&4&1&2&1&1&&1
14 &&4&6&9&5&6&3&4&1&2&1&1&&1
15 &1&3&9&8&10&5&6&3&4&2&2&1&1& &1
16 &1&6&7&13&9&10&5&6&3&4&1&2&1&1
17 &1&4&12&11&15&9&10&5&6&3&4&1&2&1&1
18 &&5&10&18&13&16&9&10&5&6&3&4&1&2&1
19 &1&4&14&16&22&14&16&9&10&5&6&3&4&1&2
20 &1&7&12&23&21&24&14&16&9&10&5&6&3&4&1
""")

DUPLICATE4_NK = _rows("""
1 &1
2 &1
3 &1&1
4 &1&2
5 &1&2&1
6 &1&2&2
7 &1&3&2&1
8 &1&4&3&2
9 &1&4&5&2&1
10 &1&4&6&3&2
11 &1&5&7&5&2&1
12 &1&6&9&7&3&2
13 &1&6&11&9&5&2&1
14 &1&6&13&11&7&3&2
""")

CONGRUENT4_VALUES = [1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21, 28, 35, 43,
                     55, 70, 86, 105, 130, 161, 196, 236, 287, 350]


@dataclass(frozen=True)
class GoldenTable:
    name: str
    kind: str
    s: int
    max_n: int
    max_k: int
    rows: dict[int, list[int]]

    def cell(self, n: int, k: int) -> int:
        row = self.rows.get(n, [])
        return row[k - 1] if 1 <= k <= len(row) else 0


GOLDEN_NK = {
    "modular4": GoldenTable("modular4", "modular", 4, 20, 15, MODULAR4_NK),
    "congruent4": GoldenTable("congruent4", "congruent", 4, 20, 15, CONGRUENT4_NK),
    "duplicate4": GoldenTable("duplicate4", "duplicate", 4, 14, 7, DUPLICATE4_NK),
}

# (table, n, k) -> (printed, correct).  Every correct value is the
# brute-force count.  The printed modular rows 16 and 17 sum to 65 and 85,
# against 70 and 86 in the printed C_4(n) values; the congruent cell
# (15, 10) admits only 4,3,1^8.
ERRATA = {
    ("modular4", 16, 8): (0, 4),
    ("modular4", 17, 5): (5, 6),
    ("modular4", 17, 6): (13, 12),
    ("modular4", 17, 10): (8, 6),
    ("modular4", 17, 11): (1, 3),
    ("congruent4", 15, 10): (2, 1),
}


# (s, n, row index, column) -> (printed, correct); column 0/1/2 is
# modular/duplicate/congruent.  The printed duplicate image of
# 4,2,1^12 has weight 19.
BIJECTION_ERRATA = {
    (6, 18, 10, 1): ("4,3^4,2,1", "4,3^4,2"),
}


def corrected_bijection_rows(s: int, n: int) -> list[tuple[Partition, Partition, Partition]]:
    """Rows of a bijection table with errata applied, parsed."""
    out = []
    for i, row in enumerate(BIJECTION_TABLES[(s, n)]):
        row = list(row)
        for col in range(3):
            fix = BIJECTION_ERRATA.get((s, n, i, col))
            if fix:
                assert row[col] == fix[0]
                row[col] = fix[1]
        out.append(tuple(Partition.parse(x) for x in row))
    return out


# Worked recurrence illustrations: (class, s, n, k) -> summands
RECURRENCE_EXAMPLES = {
    ("modular", 4, 20, 8): [1, 2, 3, 7],
    ("congruent", 4, 20, 4): [14, 6, 2, 1],
    ("duplicate", 4, 13, 3): [5, 2, 4],
}

# C_4^3(12), V_{3,2}(12), W_{3,2}(12), row for row
ANDREWS_TABLE = [
    ("12", "1^12", "12"),
    ("11,1", "11,1", "11,1"),
    ("8,4", "8,4", "8,4"),
    ("8,3,1", "8,1^4", "8,3,1"),
    ("7,5", "7,5", "7,5"),
    ("7,4,1", "7,4,1", "7,4,1"),
    ("7,3,1^2", "7,1^5", "7,3,2"),
    ("5^2,1^2", "5^2,1^2", "10,2"),
    ("5,4,3", "5,4,1^3", "5,4,3"),
    ("5,3^2,1", "5,1^7", "6,5,1"),
    ("9,3", "4^3", "9,3"),
    ("4,3^2,1^2", "4,1^8", "6,4,2"),
    ("4^2,3,1", "4^2,1^4", "6^2"),
]


def parsed(rows):
    return [tuple(Partition.parse(x) for x in row) for row in rows]
