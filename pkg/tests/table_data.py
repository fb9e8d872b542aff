"""Printed small-value tables of S1[n,k] and S2[n,k], in canonical text form.

Keys are (n, k).  The printed S2 table has a bottom row whose entries are the
n = 9 values (its k = 2 cell sums to 255 at q = 1, the classical S(9,2));
that row is stored under n = 9.  Its k = 6 cell is cut off after two terms in
print, so only that prefix is kept, in ``S2_PRINTED_PREFIX``.
"""

S1_PRINTED = {
    (0, 0): "1",
    (1, 0): "0", (1, 1): "1",
    (2, 0): "0", (2, 1): "1", (2, 2): "1",
    (3, 0): "0", (3, 1): "q + 1", (3, 2): "3", (3, 3): "1",
    (4, 0): "0", (4, 1): "q^3 + 2*q^2 + 2*q + 1", (4, 2): "5*q + 6", (4, 3): "6", (4, 4): "1",
    (5, 0): "0", (5, 1): "q^6 + 3*q^5 + 5*q^4 + 6*q^3 + 5*q^2 + 3*q + 1",
    (5, 2): "7*q^3 + 15*q^2 + 18*q + 10", (5, 3): "15*q + 20", (5, 4): "10", (5, 5): "1",
    (6, 0): "0",
    (6, 1): "q^10 + 4*q^9 + 9*q^8 + 15*q^7 + 20*q^6 + 22*q^5 + 20*q^4 + 15*q^3 + 9*q^2 + 4*q + 1",
    (6, 2): "9*q^6 + 28*q^5 + 50*q^4 + 67*q^3 + 63*q^2 + 42*q + 15",
    (6, 3): "28*q^3 + 63*q^2 + 84*q + 50", (6, 4): "35*q + 50", (6, 5): "15", (6, 6): "1",
    (7, 0): "0",
    (7, 1): "q^15 + 5*q^14 + 14*q^13 + 29*q^12 + 49*q^11 + 71*q^10 + 90*q^9 + 101*q^8"
            " + 101*q^7 + 90*q^6 + 71*q^5 + 49*q^4 + 29*q^3 + 14*q^2 + 5*q + 1",
    (7, 2): "11*q^10 + 45*q^9 + 105*q^8 + 184*q^7 + 264*q^6 + 315*q^5 + 313*q^4"
            " + 258*q^3 + 168*q^2 + 80*q + 21",
    (7, 3): "45*q^6 + 144*q^5 + 270*q^4 + 388*q^3 + 392*q^2 + 280*q + 105",
    (7, 4): "84*q^3 + 196*q^2 + 280*q + 175", (7, 5): "70*q + 105", (7, 6): "21", (7, 7): "1",
}

S2_PRINTED = {
    (0, 0): "1",
    (1, 0): "0", (1, 1): "1",
    (2, 0): "0", (2, 1): "1", (2, 2): "1",
    (3, 0): "0", (3, 1): "1", (3, 2): "3", (3, 3): "1",
    (4, 0): "0", (4, 1): "1", (4, 2): "q + 6", (4, 3): "6", (4, 4): "1",
    (5, 0): "0", (5, 1): "1", (5, 2): "q^2 + 4*q + 10", (5, 3): "5*q + 20", (5, 4): "10", (5, 5): "1",
    (6, 0): "0", (6, 1): "1", (6, 2): "q^3 + 5*q^2 + 10*q + 15", (6, 3): "q^3 + 9*q^2 + 30*q + 50",
    (6, 4): "15*q + 50", (6, 5): "15", (6, 6): "1",
    (7, 0): "0", (7, 1): "1", (7, 2): "q^4 + 6*q^3 + 15*q^2 + 20*q + 21",
    (7, 3): "q^5 + 5*q^4 + 22*q^3 + 63*q^2 + 105*q + 105",
    (7, 4): "7*q^3 + 42*q^2 + 126*q + 175", (7, 5): "35*q + 105", (7, 6): "21",
    (9, 0): "0", (9, 1): "1",
    (9, 2): "q^6 + 8*q^5 + 28*q^4 + 56*q^3 + 70*q^2 + 56*q + 36",
    (9, 3): "q^9 + 7*q^8 + 29*q^7 + 83*q^6 + 191*q^5 + 376*q^4 + 616*q^3 + 756*q^2 + 630*q + 336",
    (9, 4): "q^9 + 6*q^8 + 30*q^7 + 110*q^6 + 315*q^5 + 720*q^4 + 1380*q^3 + 2016*q^2 + 2016*q + 1176",
    (9, 5): "9*q^6 + 72*q^5 + 270*q^4 + 804*q^3 + 1680*q^2 + 2352*q + 1764",
}

S2_PRINTED_PREFIX = {(9, 6): "84*q^3 + 378*q^2"}
