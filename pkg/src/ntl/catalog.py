"""Frozen reference data: known novel partitions by length.

NOVEL_BY_LENGTH holds the proved-complete lists for lengths 2..7 (these
are re-derived and cross-checked by novelty.enumerate_novel in the test
suite).  LENGTH8 holds the 122 conjectured novel partitions of length 8
together with their complement sizes |lambda^perpB|; completeness for
length 8 is conjectural, so consumers must label these rows accordingly.
"""

NOVEL_BY_LENGTH = {
    2: ((1, 1),),
    3: (),
    4: ((1, 1, 1, 1),),
    5: ((2, 1, 1, 1, 1),),
    6: (
        (1, 1, 1, 1, 1, 1),
        (2, 2, 1, 1, 1, 1),
        (3, 1, 1, 1, 1, 1),
        (3, 2, 2, 1, 1, 1),
    ),
    7: (
        (2, 1, 1, 1, 1, 1, 1),
        (2, 2, 2, 1, 1, 1, 1),
        (3, 2, 1, 1, 1, 1, 1),
        (3, 2, 2, 2, 1, 1, 1),
        (3, 3, 2, 1, 1, 1, 1),
        (3, 3, 2, 2, 2, 1, 1),
        (4, 1, 1, 1, 1, 1, 1),
        (4, 2, 2, 1, 1, 1, 1),
        (4, 3, 2, 2, 1, 1, 1),
        (4, 3, 3, 1, 1, 1, 1),
        (4, 3, 3, 2, 2, 1, 1),
        (5, 2, 2, 2, 1, 1, 1),
        (5, 3, 3, 2, 1, 1, 1),
        (5, 4, 3, 2, 2, 1, 1),
    ),
}

# (parts, |complement|) pairs, length 8, conjectured complete
LENGTH8 = (
    ((1, 1, 1, 1, 1, 1, 1, 1), 70),
    ((5, 4, 4, 3, 3, 2, 2, 1), 22),
    ((6, 5, 5, 2, 2, 2, 1, 1), 16),
    ((2, 2, 1, 1, 1, 1, 1, 1), 52),
    ((5, 3, 3, 3, 2, 2, 1, 1), 22),
    ((6, 5, 5, 3, 3, 2, 1, 1), 16),
    ((2, 2, 2, 2, 1, 1, 1, 1), 44),
    ((6, 5, 3, 2, 2, 2, 1, 1), 22),
    ((6, 5, 5, 4, 4, 3, 3, 2), 16),
    ((3, 3, 1, 1, 1, 1, 1, 1), 42),
    ((6, 4, 3, 2, 2, 1, 1, 1), 22),
    ((7, 6, 4, 3, 3, 2, 2, 1), 16),
    ((3, 1, 1, 1, 1, 1, 1, 1), 42),
    ((6, 4, 4, 3, 2, 1, 1, 1), 22),
    ((7, 6, 5, 3, 3, 2, 1, 1), 16),
    ((3, 2, 2, 1, 1, 1, 1, 1), 40),
    ((6, 3, 2, 2, 2, 1, 1, 1), 22),
    ((7, 6, 5, 4, 3, 2, 2, 1), 16),
    ((3, 3, 2, 2, 1, 1, 1, 1), 36),
    ((5, 5, 4, 2, 2, 2, 1, 1), 20),
    ((7, 6, 5, 4, 4, 3, 2, 1), 16),
    ((3, 2, 2, 2, 2, 1, 1, 1), 36),
    ((5, 5, 4, 3, 3, 2, 1, 1), 20),
    ((7, 5, 5, 4, 3, 2, 1, 1), 16),
    ((3, 3, 2, 2, 2, 2, 1, 1), 34),
    ((6, 5, 3, 3, 2, 1, 1, 1), 20),
    ((8, 7, 4, 3, 3, 2, 2, 1), 16),
    ((4, 3, 2, 1, 1, 1, 1, 1), 32),
    ((6, 5, 4, 3, 2, 2, 1, 1), 20),
    ((8, 6, 4, 3, 3, 2, 1, 1), 16),
    ((4, 2, 1, 1, 1, 1, 1, 1), 32),
    ((6, 4, 3, 3, 1, 1, 1, 1), 20),
    ((8, 6, 5, 4, 3, 2, 1, 1), 16),
    ((4, 2, 2, 2, 1, 1, 1, 1), 32),
    ((6, 4, 3, 3, 2, 2, 1, 1), 20),
    ((8, 5, 4, 3, 2, 2, 1, 1), 16),
    ((3, 3, 3, 1, 1, 1, 1, 1), 30),
    ((6, 3, 3, 2, 1, 1, 1, 1), 20),
    ((8, 5, 5, 4, 2, 2, 1, 1), 16),
    ((3, 3, 3, 2, 2, 1, 1, 1), 30),
    ((6, 3, 3, 2, 2, 2, 1, 1), 20),
    ((8, 4, 3, 3, 2, 2, 1, 1), 16),
    ((4, 4, 2, 2, 1, 1, 1, 1), 30),
    ((4, 4, 3, 3, 3, 1, 1, 1), 18),
    ((5, 5, 4, 4, 3, 3, 3, 1), 14),
    ((4, 3, 2, 2, 2, 1, 1, 1), 30),
    ((5, 5, 3, 3, 3, 1, 1, 1), 18),
    ((5, 4, 4, 1, 1, 1, 1, 1), 14),
    ((4, 3, 3, 2, 1, 1, 1, 1), 30),
    ((5, 5, 4, 4, 3, 2, 2, 1), 18),
    ((5, 3, 3, 3, 2, 2, 2, 2), 14),
    ((4, 3, 3, 2, 2, 2, 1, 1), 28),
    ((5, 4, 4, 3, 3, 1, 1, 1), 18),
    ((5, 1, 1, 1, 1, 1, 1, 1), 14),
    ((3, 3, 3, 2, 2, 2, 2, 1), 26),
    ((5, 4, 4, 3, 3, 3, 2, 2), 18),
    ((7, 6, 4, 3, 3, 1, 1, 1), 14),
    ((4, 4, 3, 2, 2, 1, 1, 1), 26),
    ((6, 5, 3, 3, 2, 2, 2, 1), 18),
    ((7, 6, 5, 2, 2, 2, 1, 1), 14),
    ((4, 4, 3, 3, 2, 2, 1, 1), 26),
    ((6, 5, 4, 2, 2, 1, 1, 1), 18),
    ((7, 6, 5, 4, 4, 2, 1, 1), 14),
    ((4, 3, 3, 3, 2, 1, 1, 1), 26),
    ((6, 5, 4, 3, 3, 1, 1, 1), 18),
    ((7, 6, 5, 5, 4, 3, 3, 1), 14),
    ((4, 3, 3, 3, 2, 2, 2, 1), 26),
    ((6, 5, 4, 3, 3, 2, 2, 1), 18),
    ((7, 5, 4, 4, 3, 3, 2, 2), 14),
    ((5, 4, 2, 2, 2, 1, 1, 1), 26),
    ((6, 5, 4, 4, 3, 2, 1, 1), 18),
    ((7, 5, 5, 2, 2, 1, 1, 1), 14),
    ((5, 3, 2, 2, 1, 1, 1, 1), 26),
    ((6, 5, 4, 4, 3, 3, 2, 1), 18),
    ((7, 4, 3, 3, 3, 2, 2, 2), 14),
    ((5, 3, 3, 2, 2, 1, 1, 1), 26),
    ((6, 5, 5, 4, 3, 2, 2, 1), 18),
    ((7, 4, 4, 3, 1, 1, 1, 1), 14),
    ((5, 3, 3, 3, 1, 1, 1, 1), 26),
    ((6, 4, 4, 2, 1, 1, 1, 1), 18),
    ((7, 3, 3, 3, 1, 1, 1, 1), 14),
    ((5, 2, 2, 2, 2, 1, 1, 1), 26),
    ((6, 4, 4, 3, 3, 2, 1, 1), 18),
    ((7, 2, 2, 2, 2, 1, 1, 1), 14),
    ((5, 4, 3, 2, 1, 1, 1, 1), 24),
    ((6, 2, 2, 2, 1, 1, 1, 1), 18),
    ((8, 7, 5, 3, 3, 2, 1, 1), 14),
    ((5, 4, 3, 2, 2, 2, 1, 1), 24),
    ((7, 6, 3, 3, 2, 2, 2, 1), 18),
    ((8, 7, 5, 4, 3, 2, 2, 1), 14),
    ((5, 4, 3, 3, 2, 1, 1, 1), 24),
    ((7, 6, 4, 3, 2, 2, 1, 1), 18),
    ((8, 7, 6, 5, 4, 3, 2, 1), 14),
    ((5, 3, 2, 2, 2, 2, 1, 1), 24),
    ((7, 5, 3, 3, 2, 2, 1, 1), 18),
    ((8, 6, 5, 3, 3, 1, 1, 1), 14),
    ((5, 3, 3, 1, 1, 1, 1, 1), 24),
    ((7, 5, 4, 3, 2, 1, 1, 1), 18),
    ((8, 5, 5, 3, 2, 1, 1, 1), 14),
    ((5, 2, 2, 1, 1, 1, 1, 1), 24),
    ((7, 5, 4, 3, 3, 2, 1, 1), 18),
    ((8, 3, 3, 3, 2, 1, 1, 1), 14),
    ((4, 4, 3, 1, 1, 1, 1, 1), 22),
    ((7, 5, 4, 4, 2, 2, 1, 1), 18),
    ((9, 8, 5, 4, 3, 2, 2, 1), 14),
    ((4, 4, 3, 3, 3, 2, 2, 1), 22),
    ((7, 5, 5, 3, 3, 1, 1, 1), 18),
    ((9, 7, 5, 4, 3, 2, 1, 1), 14),
    ((5, 5, 3, 2, 2, 1, 1, 1), 22),
    ((7, 4, 3, 2, 2, 2, 1, 1), 18),
    ((9, 7, 6, 4, 4, 2, 1, 1), 14),
    ((5, 4, 3, 3, 2, 2, 2, 1), 22),
    ((7, 4, 4, 2, 2, 1, 1, 1), 18),
    ((9, 6, 5, 4, 2, 2, 1, 1), 14),
    ((5, 4, 3, 3, 3, 2, 1, 1), 22),
    ((7, 4, 4, 3, 2, 2, 1, 1), 18),
    ((9, 5, 5, 3, 2, 2, 1, 1), 14),
    ((5, 4, 4, 2, 2, 1, 1, 1), 22),
    ((7, 3, 3, 2, 2, 1, 1, 1), 18),
    ((9, 4, 4, 3, 2, 2, 1, 1), 14),
    ((5, 4, 4, 3, 2, 2, 1, 1), 22),
    ((7, 3, 3, 3, 2, 2, 1, 1), 18),
)
