"""Transcribed F-curve expressions for the two dihedral D_3 curves.

Each term is (coefficient, blocks) where blocks are comma-separated and every
character inside a block is one label (a, b, c stand for 10, 11, 12).
For n = 9 and n = 12 the labels 8 and 9 are the heavy points.
"""

from m0ncurves.core import FCurve, FCurveExpression, KeelRelation
from m0ncurves.permutations import parse_label


def parse_blocks(text):
    return [[parse_label(ch) for ch in block.strip()] for block in text.split(",")]


def fcurve(text, n):
    return FCurve.from_blocks(parse_blocks(text), n)


def expression(terms, n):
    return FCurveExpression(n, [(fcurve(s, n), c) for c, s in terms])


N9_ROTATION = "(123)(456)(789)"
N9_REFLECTION = "(14)(26)(35)(89)"
N12_ROTATION = "(123)(456)(789)(abc)"
N12_REFLECTION = "(14)(26)(35)(89)(bc)"

N9_TRIPLES = ["147", "258", "369", "168", "249", "357", "159", "267", "348"]
N12_TRIPLES = N9_TRIPLES + ["15c", "26a", "34b", "14a", "25b", "36c", "16b", "24c", "35a"]

N9_LIFTED = [
    (1, "82,1,5,34679"),
    (1, "8,1,2,345679"),
    (1, "81245,3,7,69"),
    (1, "8125,3,4,679"),
    (2, "812,3,5,4679"),
    (1, "8123,4,5,679"),
    (1, "812345,6,7,9"),
    (1, "81356,2,7,49"),
    (1, "8136,2,5,479"),
    (1, "816,2,3,4579"),
    (2, "81,2,6,34579"),
    (1, "812,3,6,4579"),
    (1, "812356,4,7,9"),
    (1, "81236,4,5,79"),
    (2, "8123,4,6,579"),
    (1, "81234,5,6,79"),
    (1, "82346,1,7,59"),
    (1, "8234,1,6,579"),
    (1, "834,1,2,5679"),
    (2, "83,1,4,25679"),
    (2, "8,1,3,245679"),
    (1, "813,2,4,5679"),
    (1, "81,2,3,45679"),
    (1, "812346,5,7,9"),
    (1, "81234,5,6,79"),
    (-2, "1,2,3,456789"),
    (-2, "4,5,6,123789"),
    (-1, "1,4,7,235689"),
    (-1, "2,6,7,134589"),
    (-1, "3,5,7,124689"),
]

N9_RELATIONS = [
    [(1, "1,2,3,456789"), (1, "13,2,8,45679"), (-1, "1,2,8,345679"), (-1, "81,2,3,45679")],
    [(1, "4,5,6,123789"), (1, "8123,45,6,79"), (-1, "8123,4,6,579"), (-1, "81234,5,6,79")],
    [(1, "4,5,6,123789"), (1, "4,56,79,8123"), (-1, "81236,4,5,79"), (-1, "8123,4,6,579")],
    [(1, "812,4,5,3679"), (1, "8124,3,5,679"), (-1, "812,3,5,4679"), (-1, "8123,4,5,679")],
    [(1, "8124,5,6,379"), (1, "81246,3,5,79"), (-1, "8124,3,5,679"), (-1, "81234,5,6,79")],
    [(1, "812469,3,5,7"), (1, "81246,5,9,37"), (-1, "81246,3,5,79"), (-1, "812346,5,7,9")],
    [(1, "81,3,6,24579"), (1, "813,2,6,4579"), (-1, "81,2,6,34579"), (-1, "812,3,6,4579")],
    [(1, "813,6,45,279"), (1, "81345,2,6,79"), (-1, "813,2,6,4579"), (-1, "8123,6,45,79")],
    [(1, "81345,6,9,27"), (1, "813459,2,6,7"), (-1, "81345,2,6,79"), (-1, "812345,6,7,9")],
    [(1, "823,1,4,5679"), (1, "83,1,2,45679"), (-1, "834,1,2,5679"), (-1, "83,1,4,25679")],
    [(1, "1,8,23,45679"), (1, "1,2,3,456789"), (-1, "83,1,2,45679"), (-1, "1,3,8,245679")],
    [(1, "83,2,4,15679"), (1, "823,1,4,5679"), (-1, "83,1,4,25679"), (-1, "813,2,4,5679")],
    [(1, "823,4,56,179"), (1, "82356,1,4,79"), (-1, "823,1,4,5679"), (-1, "8123,4,56,79")],
    [(1, "82356,4,17,9"), (1, "1,4,7,235689"), (-1, "82356,1,4,79"), (-1, "812356,4,7,9")],
]

N9_EFFECTIVE = [
    (1, "82,1,5,34679"),
    (1, "81245,3,7,69"),
    (1, "8125,3,4,679"),
    (1, "812,3,5,4679"),
    (1, "81356,2,7,49"),
    (1, "8136,2,5,479"),
    (1, "816,2,3,4579"),
    (1, "81,2,6,34579"),
    (1, "82346,1,7,59"),
    (1, "8234,1,6,579"),
    (1, "8,1,3,245679"),
    (1, "13,2,8,45679"),
    (1, "812,4,5,3679"),
    (1, "8124,5,6,379"),
    (1, "81246,5,9,37"),
    (1, "81,3,6,24579"),
    (1, "813,6,45,279"),
    (1, "81345,6,9,27"),
    (1, "823,1,4,5679"),
    (1, "8,1,23,45679"),
    (1, "83,2,4,15679"),
    (1, "823,4,56,179"),
    (1, "82356,4,17,9"),
]

N12_TORIC = [
    (1, "82,1,5,3467abc9"),
    (1, "8,1,2,34567abc9"),
    (1, "812457ab,3,c,69"),
    (1, "812457a,3,b,6c9"),
    (1, "812457,3,a,6bc9"),
    (1, "81245,3,7,6abc9"),
    (1, "8125,3,4,67abc9"),
    (2, "812,3,5,467abc9"),
    (1, "8123,4,5,67abc9"),
    (1, "8123457ab,6,c,9"),
    (1, "8123457a,6,b,c9"),
    (1, "8123457,6,a,bc9"),
    (1, "812345,6,7,abc9"),
    (1, "813567ab,2,c,49"),
    (1, "813567a,2,b,4c9"),
    (1, "813567,2,a,4bc9"),
    (1, "81356,2,7,4abc9"),
    (1, "8136,2,5,47abc9"),
    (1, "816,2,3,457abc9"),
    (2, "81,2,6,3457abc9"),
    (1, "812,3,6,457abc9"),
    (1, "8123567ab,4,c,9"),
    (1, "8123567a,4,b,c9"),
    (1, "8123567,4,a,bc9"),
    (1, "812356,4,7,abc9"),
    (1, "81236,4,5,7abc9"),
    (2, "8123,4,6,57abc9"),
    (1, "81234,5,6,7abc9"),
    (1, "823467ab,1,c,59"),
    (1, "823467a,1,b,5c9"),
    (1, "823467,1,a,5bc9"),
    (1, "82346,1,7,5abc9"),
    (1, "8234,1,6,57abc9"),
    (1, "834,1,2,567abc9"),
    (2, "83,1,4,2567abc9"),
    (2, "8,1,3,24567abc9"),
    (1, "813,2,4,567abc9"),
    (1, "81,2,3,4567abc9"),
    (1, "8123467ab,5,c,9"),
    (1, "8123467a,5,b,c9"),
    (1, "8123467,5,a,bc9"),
    (1, "812346,5,7,abc9"),
    (1, "81234,5,6,7abc9"),
]

N12_LIFTED = [
    (1, "82,1,5,3467abc9"),
    (1, "8,1,2,34567abc9"),
    (1, "812457ab,3,c,69"),
    (1, "812457a,3,b,6c9"),
    (1, "812457,3,a,6bc9"),
    (1, "81245,3,7,6abc9"),
    (1, "8125,3,4,67abc9"),
    (2, "812,3,5,467abc9"),
    (1, "8123,4,5,67abc9"),
    (1, "8123457ab,6,c,9"),
    (1, "8123457a,6,b,c9"),
    (1, "8123457,6,a,bc9"),
    (1, "812345,6,7,abc9"),
    (1, "813567ab,2,c,49"),
    (1, "813567a,2,b,4c9"),
    (1, "813567,2,a,4bc9"),
    (1, "81356,2,7,4abc9"),
    (1, "8136,2,5,47abc9"),
    (1, "816,2,3,457abc9"),
    (2, "81,2,6,3457abc9"),
    (1, "812,3,6,457abc9"),
    (1, "8123567ab,4,c,9"),
    (1, "8123567a,4,b,c9"),
    (1, "8123567,4,a,bc9"),
    (1, "812356,4,7,abc9"),
    (1, "81236,4,5,7abc9"),
    (2, "8123,4,6,57abc9"),
    (1, "81234,5,6,7abc9"),
    (1, "823467ab,1,c,59"),
    (1, "823467a,1,b,5c9"),
    (1, "823467,1,a,5bc9"),
    (1, "82346,1,7,5abc9"),
    (1, "8234,1,6,57abc9"),
    (1, "834,1,2,567abc9"),
    (2, "83,1,4,2567abc9"),
    (2, "8,1,3,24567abc9"),
    (1, "813,2,4,567abc9"),
    (1, "81,2,3,4567abc9"),
    (1, "8123467ab,5,c,9"),
    (1, "8123467a,5,b,c9"),
    (1, "8123467,5,a,bc9"),
    (1, "812346,5,7,abc9"),
    (1, "81234,5,6,7abc9"),
    (-2, "1,2,3,456789abc"),
    (-2, "4,5,6,123789abc"),
    (-1, "1,4,7,235689abc"),
    (-1, "3,5,7,124689abc"),
    (-1, "2,6,7,134589abc"),
    (-1, "1,5,c,2346789ab"),
    (-1, "2,6,a,1345789bc"),
    (-1, "3,4,b,1256789ac"),
    (-1, "1,4,a,2356789bc"),
    (-1, "2,5,b,1346789ac"),
    (-1, "3,6,c,1245789ab"),
    (-1, "1,6,b,2345789ac"),
    (-1, "2,4,c,1356789ab"),
    (-1, "3,5,a,1246789bc"),
]

N12_RELATIONS = [
    [(1, "1238,4,56,79abc"), (-1, "1238,4,579abc,6"), (-1, "12368,4,5,79abc"), (1, "123789abc,4,5,6")],
    [(1, "1238,45,6,79abc"), (-1, "1238,4,579abc,6"), (-1, "12348,5,6,79abc"), (1, "123789abc,4,5,6")],
    [(1, "124578ab,36,9,c"), (-1, "124578ab,3,69,c"), (-1, "1234578ab,6,9,c"), (1, "1245789ab,3,6,c")],
    [(1, "12,3,45679abc,8"), (-1, "1,245679abc,3,8"), (-1, "18,2,3,45679abc"), (1, "1,2,3,456789abc")],
    [(1, "135678ab,24,9,c"), (-1, "1235678ab,4,9,c"), (-1, "135678ab,2,49,c"), (1, "1356789ab,2,4,c")],
    [(1, "15,234678ab,9,c"), (-1, "1,234678ab,59,c"), (-1, "1234678ab,5,9,c"), (1, "1,2346789ab,5,c")],
    [(1, "1248,3,57,69abc"), (-1, "12458,3,69abc,7"), (-1, "1248,3,5,679abc"), (1, "124689abc,3,5,7")],
    [(1, "128,3679abc,4,5"), (-1, "1238,4,5,679abc"), (-1, "128,3,4679abc,5"), (1, "1248,3,5,679abc")],
    [(1, "1,23,45679abc,8"), (-1, "1,245679abc,3,8"), (-1, "1,2,38,45679abc"), (1, "1,2,3,456789abc")],
    [(1, "1,238,4,5679abc"), (-1, "1,25679abc,38,4"), (-1, "1,2,348,5679abc"), (1, "1,2,38,45679abc")],
    [(1, "1,2368,47,59abc"), (-1, "1,23468,59abc,7"), (-1, "1,2368,4,579abc"), (1, "1,235689abc,4,7")],
    [(1, "1,238,4579abc,6"), (-1, "1,2348,579abc,6"), (-1, "1,238,4,5679abc"), (1, "1,2368,4,579abc")],
    [(1, "1368,2,479ac,5b"), (-1, "1368,2,479abc,5"), (-1, "13568,2,479ac,b"), (1, "1346789ac,2,5,b")],
    [(1, "13568b,2,49c,7a"), (-1, "135678a,2,49c,b"), (-1, "13568,2,49bc,7a"), (1, "13568,2,479ac,b")],
    [(1, "1345689bc,2,7,a"), (-1, "13568,2,49abc,7"), (-1, "135678,2,49bc,a"), (1, "13568,2,49bc,7a")],
    [(1, "1,238,4579ac,6b"), (-1, "1,238,4579abc,6"), (-1, "1,2368,4579ac,b"), (1, "1,2345789ac,6,b")],
    [(1, "1,2368b,47,59ac"), (-1, "1,2368,47,59abc"), (-1, "1,234678,59ac,b"), (1, "1,2368,4579ac,b")],
    [(1, "1,234678b,59c,a"), (-1, "1,234678,59bc,a"), (-1, "1,234678a,59c,b"), (1, "1,234678,59ac,b")],
    [(1, "134589bc,2,67,a"), (-1, "1345689bc,2,7,a"), (-1, "134589bc,2,6,7a"), (1, "134589abc,2,6,7")],
    [(1, "134589bc,26,7,a"), (-1, "134589bc,2,67,a"), (-1, "1234589bc,6,7,a"), (1, "1345789bc,2,6,a")],
    [(1, "123458,6,7a,9bc"), (-1, "123458,6,7,9abc"), (-1, "1234578,6,9bc,a"), (1, "1234589bc,6,7,a")],
    [(1, "1358b,2,49c,67a"), (-1, "13568b,2,49c,7a"), (-1, "1358b,2,479ac,6"), (1, "134589bc,2,6,7a")],
    [(1, "18,2,35b,4679ac"), (-1, "18,2,34579abc,6"), (-1, "168,2,35b,479ac"), (1, "1358b,2,479ac,6")],
    [(1, "146789ac,2,3,5b"), (-1, "168,2,3,4579abc"), (-1, "1368,2,479ac,5b"), (1, "168,2,35b,479ac")],
    [(1, "12478,3,5a,69bc"), (-1, "124578,3,69bc,a"), (-1, "12478,3,5,69abc"), (1, "1246789bc,3,5,a")],
    [(1, "1248,35,69abc,7"), (-1, "1248,3,57,69abc"), (-1, "12348,5,69abc,7"), (1, "12478,3,5,69abc")],
    [(1, "123478,5,6,9abc"), (-1, "12348,5,6,79abc"), (-1, "123468,5,7,9abc"), (1, "12348,5,69abc,7")],
    [(1, "1a,25679bc,38,4"), (-1, "1,25679abc,38,4"), (-1, "138,25679bc,4,a"), (1, "1,2356789bc,4,a")],
    [(1, "138a,2567,4,9bc"), (-1, "1235678,4,9bc,a"), (-1, "138,2567,4,9abc"), (1, "138,25679bc,4,a")],
    [(1, "1389abc,2,4,567"), (-1, "138,2,4,5679abc"), (-1, "1238,4,567,9abc"), (1, "138,2567,4,9abc")],
    [(1, "12389abc,4,56,7"), (-1, "1238,4,56,79abc"), (-1, "123568,4,7,9abc"), (1, "1238,4,567,9abc")],
    [(1, "125678a,3b,4,9c"), (-1, "1235678a,4,9c,b"), (-1, "125678a,3,4,9bc"), (1, "1256789ac,3,4,b")],
    [(1, "18a,2567,39bc,4"), (-1, "138a,2567,4,9bc"), (-1, "18a,25679bc,3,4"), (1, "125678a,3,4,9bc")],
    [(1, "1a,235679bc,4,8"), (-1, "1a,25679bc,38,4"), (-1, "125679abc,3,4,8"), (1, "18a,25679bc,3,4")],
    [(1, "12,3,48,5679abc"), (-1, "12,3,45679abc,8"), (-1, "128,3,4,5679abc"), (1, "125679abc,3,4,8")],
    [(1, "1238,4,5,679abc"), (-1, "128,3679abc,4,5"), (-1, "1258,3,4,679abc"), (1, "128,3,4,5679abc")],
]

N12_EFFECTIVE = [
    (1, "124578ab,36,9,c"),
    (1, "1,28,34679abc,5"),
    (1, "1,2,345679abc,8"),
    (1, "1a,235679bc,4,8"),
    (1, "1234678,5,9bc,a"),
    (1, "1238,45,6,79abc"),
    (1, "134589bc,26,7,a"),
    (1, "1,2368b,47,59ac"),
    (1, "1,234678b,59c,a"),
    (1, "125678a,3b,4,9c"),
    (1, "1248,35,69abc,7"),
    (1, "1238,4,5,679abc"),
    (1, "1,23,45679abc,8"),
    (1, "1234678a,5,9c,b"),
    (1, "15,234678ab,9,c"),
    (1, "12389abc,4,56,7"),
    (1, "12478,3,5a,69bc"),
    (1, "146789ac,2,3,5b"),
    (1, "1358b,2,49c,67a"),
    (1, "128,3,4579abc,6"),
    (1, "18,2,35b,4679ac"),
    (1, "18a,2567,39bc,4"),
    (1, "12,3,48,5679abc"),
    (1, "123478,5,6,9abc"),
    (1, "128,3,4679abc,5"),
    (1, "1,238,4579ac,6b"),
    (1, "124578a,3,69c,b"),
    (1, "123458,6,7a,9bc"),
    (1, "18,2,34579abc,6"),
    (1, "1234578a,6,9c,b"),
    (1, "135678ab,24,9,c"),
    (1, "1389abc,2,4,567"),
]


# Intermediate limit cycles C^1 .. C^6 of the n = 9 degeneration (ascending
# subgroup order).  Each entry is "type" or "type (mult)".  For C^1 .. C^3 the
# main component is listed first; from C^4 on it is part of the printed
# chains.  The printed lists write a stray heavy label 9 in three places
# ("37|69", "34|7|69", "37|6|9"); it is dropped here.
N9_STEPS = [
    ["1|234567", "125|47|36", "34|1267|5", "134|267|5 (2)"],
    ["1|2|34567",
     "2|15|47|36", "12|5|47|36",
     "1|6|2357|4", "1|26|357|4 (2)",
     "34|2|167|5", "34|12|67|5", "134|2|67|5 (2)", "1|234|67|5"],
    ["1|2|3|4567",
     "2|15|47|3|6", "12|5|47|3|6", "1|2|5|347|6", "1|2|35|47|6 (2)",
     "1|6|3|257|4", "1|6|23|57|4", "1|26|3|57|4 (2)", "1|2|36|57|4",
     "3|4|2|167|5", "3|4|12|67|5", "3|14|2|67|5 (2)", "13|4|2|67|5 (2)",
     "1|3|24|67|5", "1|23|4|67|5"],
    ["2|15|4|7|3|6", "12|5|4|7|3|6", "1|2|5|4|37|6", "1|2|5|34|7|6", "1|2|35|4|7|6 (2)",
     "1|2|3|45|7|6",
     "1|6|3|257|4", "1|6|23|57|4", "1|26|3|57|4 (2)", "1|2|36|57|4", "1|2|3|6|457",
     "1|2|3|46|57 (2)",
     "3|4|2|167|5", "3|4|12|67|5", "3|14|2|67|5 (2)", "13|4|2|67|5 (2)", "1|3|24|67|5",
     "1|23|4|67|5", "1|2|3|4|567"],
    ["2|15|4|7|3|6", "12|5|4|7|3|6", "1|2|5|4|37|6", "1|2|5|34|7|6", "1|2|35|4|7|6 (2)",
     "1|2|3|45|7|6", "1|2|3|4|5|67",
     "1|6|3|5|27|4", "1|6|3|25|7|4", "1|6|23|5|7|4", "1|26|3|5|7|4 (2)", "1|2|36|5|7|4",
     "1|2|3|6|5|47", "1|2|3|6|45|7", "1|2|3|46|5|7 (2)", "1|2|3|4|56|7",
     "3|4|2|167|5", "3|4|12|67|5", "3|14|2|67|5 (2)", "13|4|2|67|5 (2)", "1|3|24|67|5",
     "1|23|4|67|5", "1|2|3|4|567"],
    ["2|15|4|7|3|6", "12|5|4|7|3|6", "1|2|5|4|37|6", "1|2|5|34|7|6", "1|2|35|4|7|6 (2)",
     "1|2|3|45|7|6", "1|2|3|4|5|67",
     "1|6|3|5|27|4", "1|6|3|25|7|4", "1|6|23|5|7|4", "1|26|3|5|7|4 (2)", "1|2|36|5|7|4",
     "1|2|3|6|5|47", "1|2|3|6|45|7", "1|2|3|46|5|7 (2)", "1|2|3|4|56|7",
     "3|4|2|6|17|5", "3|4|2|16|7|5", "3|4|12|6|7|5", "3|14|2|6|7|5 (2)", "13|4|2|6|7|5 (2)",
     "1|3|24|6|7|5", "1|23|4|6|7|5", "1|2|3|4|6|57", "1|2|3|4|56|7"],
]


def step_counter(entries):
    """Aggregate "type (mult)" strings into {type string: total multiplicity}."""
    from collections import Counter
    out = Counter()
    for e in entries:
        t, _, mult = e.partition(" ")
        out[t] += int(mult.strip("()")) if mult else 1
    return dict(out)
