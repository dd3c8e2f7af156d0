"""Hand-built golden posets: the (2,2) semistandard posets of all four
algebras plus companion fixtures.  Vertex ids follow the grid total order,
so these double as total-order goldens.
"""

from ranktwo.algebras import ALPHA as A, BETA as B
from ranktwo.grid import GridPoset

# the 8-vertex two-color grid poset for the A2 pair (2,2)
A2_22 = GridPoset.build(
    colors={1: B, 2: B, 3: A, 4: A, 5: A, 6: A, 7: B, 8: B},
    covers=[(6, 5), (5, 4), (4, 3), (2, 1), (8, 7),
            (6, 2), (5, 1), (8, 4), (7, 3)],
    chain={1: 1, 2: 1, 3: 2, 4: 2, 5: 2, 6: 2, 7: 3, 8: 3},
)

# the 14-vertex C2 poset for (2,2)
C2_22 = GridPoset.build(
    colors={1: B, 2: B, 3: A, 4: A, 5: A, 6: A, 7: A, 8: A,
            9: B, 10: B, 11: B, 12: B, 13: A, 14: A},
    covers=[(2, 1), (8, 7), (7, 6), (6, 5), (5, 4), (4, 3),
            (12, 11), (11, 10), (10, 9), (14, 13),
            (12, 8), (7, 2), (11, 6), (5, 1), (14, 10), (10, 4),
            (13, 9), (9, 3)],
    chain={1: 1, 2: 1, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2, 8: 2,
           9: 3, 10: 3, 11: 3, 12: 3, 13: 4, 14: 4},
)

# the 32-vertex G2 poset for (2,2)
G2_22 = GridPoset.build(
    colors={
        1: B, 2: B,
        3: A, 4: A, 5: A, 6: A, 7: A, 8: A, 9: A, 10: A,
        11: B, 12: B, 13: B, 14: B, 15: B, 16: B,
        17: A, 18: A, 19: A, 20: A, 21: A, 22: A, 23: A, 24: A, 25: A, 26: A,
        27: B, 28: B, 29: B, 30: B,
        31: A, 32: A,
    },
    covers=[
        (2, 1),
        (10, 9), (9, 8), (8, 7), (7, 6), (6, 5), (5, 4), (4, 3),
        (16, 15), (15, 14), (14, 13), (13, 12), (12, 11),
        (26, 25), (25, 24), (24, 23), (23, 22), (22, 21),
        (21, 20), (20, 19), (19, 18), (18, 17),
        (30, 29), (29, 28), (28, 27),
        (32, 31),
        (30, 26), (25, 16), (16, 10), (24, 15), (15, 9), (29, 23),
        (8, 2), (22, 14), (14, 7), (21, 13), (13, 6), (32, 28),
        (28, 20), (5, 1), (19, 12), (12, 4), (31, 27), (27, 18),
        (17, 11), (11, 3),
    ],
    chain={**{v: 1 for v in (1, 2)},
           **{v: 2 for v in range(3, 11)},
           **{v: 3 for v in range(11, 17)},
           **{v: 4 for v in range(17, 27)},
           **{v: 5 for v in range(27, 31)},
           **{v: 6 for v in (31, 32)}},
)

# the 7-vertex C2 poset for (1,1)
C2_11 = GridPoset.build(
    colors={1: B, 2: A, 3: A, 4: A, 5: B, 6: B, 7: A},
    covers=[(4, 3), (3, 2), (6, 5), (6, 4), (3, 1), (7, 5), (5, 2)],
    chain={1: 1, 2: 2, 3: 2, 4: 2, 5: 3, 6: 3, 7: 4},
)

# indecomposable companions of the 11-vertex non-splitting example
NONSPLITTING_PIECE_1 = GridPoset.build(
    colors={0: B, 1: A, 2: A, 3: A, 4: A, 5: B},
    covers=[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
    chain={0: 3, 1: 2, 2: 2, 3: 2, 4: 2, 5: 1},
)
NONSPLITTING_PIECE_2 = GridPoset.build(
    colors={0: A, 1: B, 2: B, 3: B, 4: A},
    covers=[(0, 1), (1, 2), (2, 3), (3, 4)],
    chain={0: 3, 1: 2, 2: 2, 3: 2, 4: 1},
)

# the sixteen expected tableau labels of the 16-element C2 lattice for (1,1)
C2_11_TABLEAUX = {
    ((1, 2), (1,)), ((1, 3), (1,)), ((1, 2), (2,)), ((1, 3), (2,)),
    ((1, 2), (3,)), ((2, 3), (2,)), ((1, 3), (3,)), ((1, 2), (4,)),
    ((2, 4), (2,)), ((2, 3), (3,)), ((1, 3), (4,)), ((2, 4), (3,)),
    ((2, 3), (4,)), ((3, 4), (3,)), ((2, 4), (4,)), ((3, 4), (4,)),
}
