"""Inequality tables transcribed from the source appendix, one string per row.

Rows are kept as close to the printed text as possible ("x_{i,j}" variables,
<=/>= with terms on both sides); tools/transcribe_catalog.py parses them and
cross-checks everything computationally before freezing JSON fixtures.
Corrections to printed typos are applied in the transcription tool, never
here, so this file stays a faithful copy of the printed tables.
"""

GENERIC_222 = """
x_{1,1} >= 0
x_{2,1} >= 0
x_{3,1} >= 0
x_{1,1} <= 1
x_{2,1} <= 1
x_{3,1} <= 1
2 x_{1,1} >= 1
2 x_{2,1} >= 1
2 x_{3,1} >= 1
x_{1,1}+x_{2,1} <= x_{3,1}+1
x_{1,1}+x_{3,1} <= x_{2,1}+1
x_{2,1}+x_{3,1} <= x_{1,1}+1
"""

W_222_ADDITIONAL = """
x_{1,1}+x_{2,1}+x_{3,1} >= 2
"""

GENERIC_223 = """
x_{1,1} >= 0
x_{2,1} >= 0
x_{3,2} >= 0
x_{1,1} <= 1
x_{2,1} <= 1
2 x_{1,1} >= 1
2 x_{2,1} >= 1
x_{3,2} <= x_{3,1}
x_{3,1}+x_{3,2} <= 1
x_{3,1}+2 x_{3,2} >= 1
x_{1,1} <= x_{2,1}+x_{3,2}
x_{1,1} <= x_{3,1}+x_{3,2}
x_{2,1} <= x_{1,1}+x_{3,2}
x_{2,1} <= x_{3,1}+x_{3,2}
x_{1,1}+x_{2,1} <= x_{3,1}+1
x_{1,1}+1 <= x_{2,1}+2 x_{3,1}+x_{3,2}
x_{2,1}+1 <= x_{1,1}+2 x_{3,1}+x_{3,2}
"""

W3_223_ADDITIONAL = """
x_{1,1}+x_{2,1}+x_{3,1}+x_{3,2} >= 2
x_{1,1}+x_{3,1} >= 1
x_{2,1}+x_{3,1} >= 1
"""

GENERIC_224 = """
x_{1,1} >= 0
x_{2,1} >= 0
x_{3,3} >= 0
x_{1,1} <= 1
x_{2,1} <= 1
2 x_{1,1} >= 1
2 x_{2,1} >= 1
x_{3,2} <= x_{3,1}
x_{3,3} <= x_{3,2}
x_{1,1} <= x_{3,1}+x_{3,2}
x_{2,1} <= x_{3,1}+x_{3,2}
x_{3,1}+x_{3,2}+x_{3,3} <= 1
x_{3,1}+x_{3,2}+2 x_{3,3} >= 1
x_{1,1}+x_{3,3} <= x_{2,1}+x_{3,1}
x_{2,1}+x_{3,3} <= x_{1,1}+x_{3,1}
x_{1,1}+x_{2,1} <= 2 x_{3,1}+x_{3,2}+x_{3,3}
x_{1,1}+1 <= x_{2,1}+x_{3,1}+2 x_{3,2}+x_{3,3}
x_{2,1}+1 <= x_{1,1}+x_{3,1}+2 x_{3,2}+x_{3,3}
"""

GENERIC_233 = """
x_{1,1} >= 0
x_{2,1} >= 0
x_{2,2} >= 0
x_{3,2} >= 0
x_{1,1} <= 1
2 x_{1,1} >= 1
x_{2,2} <= x_{2,1}
x_{3,2} <= x_{3,1}
x_{2,1}+x_{2,2} <= 1
x_{3,1}+x_{3,2} <= 1
x_{2,1}+2 x_{2,2} >= 1
x_{3,1}+2 x_{3,2} >= 1
x_{2,1} <= x_{1,1}+x_{3,2}
x_{2,1} <= x_{3,1}+x_{3,2}
x_{2,2} <= x_{1,1}+x_{3,1}
x_{3,1} <= x_{1,1}+x_{2,2}
x_{3,1} <= x_{2,1}+x_{2,2}
x_{1,1}+x_{2,1} <= x_{3,1}+1
x_{1,1}+x_{2,2} <= x_{3,1}+1
x_{1,1}+x_{2,2} <= x_{3,2}+1
x_{1,1}+x_{3,1} <= x_{2,1}+1
x_{1,1}+x_{3,2} <= x_{2,1}+1
x_{1,1}+x_{3,2} <= x_{2,2}+1
x_{1,1} <= x_{2,1}+x_{2,2}+x_{3,1}
x_{1,1} <= x_{2,1}+x_{2,2}+x_{3,2}
x_{1,1} <= x_{2,1}+x_{3,1}+x_{3,2}
x_{1,1} <= x_{2,2}+x_{3,1}+x_{3,2}
x_{2,1} <= x_{1,1}+x_{2,2}+x_{3,2}
x_{1,1}+x_{2,1} <= x_{2,2}+x_{3,1}+1
2 x_{2,1}+x_{2,2} <= x_{1,1}+x_{3,1}+1
2 x_{2,1}+x_{2,2} <= x_{1,1}+x_{3,2}+1
x_{1,1}+2 x_{2,1}+x_{2,2} <= x_{3,1}+2
x_{2,1}+2 x_{2,2} <= x_{1,1}+x_{3,2}+1
x_{1,1}+x_{2,1}+2 x_{2,2} <= x_{3,2}+2
x_{2,1}+x_{2,2} <= x_{1,1}+x_{3,1}+x_{3,2}
x_{1,1}+x_{2,1}+x_{2,2} <= x_{3,1}+x_{3,2}+1
x_{1,1}+x_{3,1}+x_{3,2} <= x_{2,1}+x_{2,2}+1
x_{1,1}+x_{2,1} <= x_{2,2}+2 x_{3,1}+x_{3,2}
x_{1,1}+x_{3,1} <= 2 x_{2,1}+x_{2,2}+x_{3,2}
x_{2,1}+1 <= x_{1,1}+x_{2,2}+x_{3,1}+2 x_{3,2}
x_{2,2}+1 <= x_{1,1}+x_{2,1}+2 x_{3,1}+x_{3,2}
x_{3,1}+1 <= x_{1,1}+x_{2,1}+2 x_{2,2}+x_{3,2}
2 <= x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2}
2 x_{2,1}+x_{2,2} <= x_{1,1}+2 x_{3,1}+x_{3,2}
x_{2,1}+2 x_{2,2} <= x_{1,1}+2 x_{3,1}+x_{3,2}
2 x_{3,1}+x_{3,2} <= x_{1,1}+2 x_{2,1}+x_{2,2}
x_{1,1}+1 <= 2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2}
x_{1,1}+x_{2,1}+2 x_{2,2} <= 2 x_{3,1}+x_{3,2}+1
x_{1,1}+x_{3,1}+2 x_{3,2} <= 2 x_{2,1}+x_{2,2}+1
"""

PSI1_233_ADDITIONAL = """
x_{1,1}+2 x_{2,1}+x_{2,2}+x_{3,1} >= 2
x_{1,1}+x_{2,1}+2 x_{3,1}+x_{3,2} >= 2
x_{1,1}+x_{2,1}+x_{2,2}+x_{3,1}+x_{3,2} >= 2
"""

PSI4_233_ADDITIONAL = """
x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2} >= 3
"""

PSI3_233_ADDITIONAL = """
x_{2,2} <= x_{3,1}
x_{3,2} <= x_{2,1}
x_{1,1}+x_{2,1} >= 1
x_{1,1}+x_{3,1} >= 1
x_{2,1}+x_{2,2}+x_{3,2} >= 1
x_{2,2}+x_{3,1}+x_{3,2} >= 1
x_{2,2}+1 <= x_{1,1}+x_{3,1}+x_{3,2}
x_{3,2}+1 <= x_{1,1}+x_{2,1}+x_{2,2}
"""

PSI2_233_ADDITIONAL = """
x_{2,2} <= x_{3,1}
x_{3,2} <= x_{2,1}
x_{1,1}+x_{2,1} >= 1
x_{1,1}+x_{3,1} >= 1
x_{2,1}+x_{2,2}+x_{3,2} >= 1
x_{2,2}+x_{3,1}+x_{3,2} >= 1
x_{1,1}+x_{2,1}+x_{2,2}+x_{3,1} >= 2
x_{1,1}+x_{2,1}+x_{3,1}+x_{3,2} >= 2
2 x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{3,1}+x_{3,2} >= 4
x_{2,2}+3 <= 2 x_{1,1}+x_{2,1}+2 x_{3,1}+2 x_{3,2}
x_{3,2}+3 <= 2 x_{1,1}+2 x_{2,1}+2 x_{2,2}+x_{3,1}
4 x_{1,1}+4 x_{2,1}+5 x_{2,2}+5 x_{3,1}+x_{3,2} >= 9
4 x_{1,1}+5 x_{2,1}+x_{2,2}+4 x_{3,1}+5 x_{3,2} >= 9
"""

GENERIC_234 = """
-x_{1,1} <= 0
-x_{2,2} <= 0
-x_{3,3} <= 0
x_{1,1}-1 <= 0
1-2 x_{1,1} <= 0
x_{2,2}-x_{2,1} <= 0
x_{3,2}-x_{3,1} <= 0
x_{3,3}-x_{3,2} <= 0
x_{2,1}+x_{2,2}-1 <= 0
-x_{2,1}-2 x_{2,2}+1 <= 0
-x_{1,1}+x_{2,1}-x_{3,2} <= 0
x_{2,1}-x_{3,1}-x_{3,2} <= 0
x_{3,1}+x_{3,2}+x_{3,3}-1 <= 0
x_{1,1}+x_{2,1}-x_{3,1}-1 <= 0
x_{1,1}+x_{2,2}-x_{3,2}-1 <= 0
-x_{3,1}-x_{3,2}-2 x_{3,3}+1 <= 0
x_{1,1}-x_{2,2}-x_{3,1}-x_{3,2} <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,3} <= 0
x_{1,1}-x_{2,1}-x_{3,1}-x_{3,3} <= 0
x_{1,1}-x_{2,2}-x_{3,1}-x_{3,3} <= 0
x_{1,1}-x_{2,1}-x_{3,2}-x_{3,3} <= 0
x_{1,1}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
-x_{1,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
-x_{2,1}-x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2} <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-x_{3,2}+x_{3,3} <= 0
x_{1,1}+x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}-1 <= 0
x_{1,1}+x_{2,1}-x_{2,2}-x_{3,1}+x_{3,3}-1 <= 0
x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3} <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}+x_{3,1}-x_{3,2} <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}+x_{3,2}-x_{3,3} <= 0
-x_{1,1}-x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}+x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}+x_{3,1}-x_{3,3}+1 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-x_{3,1}+x_{3,3}-1 <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}+x_{3,3}-1 <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}+x_{3,3}-2 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}+1 <= 0
x_{1,1}-x_{2,1}-2 x_{3,1}-2 x_{3,2}-x_{3,3}+1 <= 0
x_{1,1}+x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3} <= 0
x_{1,1}-x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3} <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3} <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3} <= 0
x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-1 <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}-1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}+3 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}+2 <= 0
"""

# 2x3x4 orbit tables; the Theta-0 row is printed without its "+1" constant
# (the class's own closest-point inequality fixes the offset) and the
# 16-row block is printed under the Theta-0 representative although the
# text attributes it to the remaining class Theta-1; both corrections are
# applied in the transcription tool, not here.
THETA2_234_ADDITIONAL = """
-x_{2,1}-x_{2,2}-x_{3,1}+1 <= 0
-x_{1,1}-x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}+2 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-2 x_{3,2}-x_{3,3}+3 <= 0
"""

THETA0_234_ADDITIONAL_PRINTED = """
-x_{2,1}-x_{3,1}-x_{3,2} <= 0
"""

THETA3_234_ADDITIONAL = """
-x_{2,1}-x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}-x_{2,1}-x_{3,1}+x_{3,3}+1 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}+2 <= 0
-x_{1,1}-x_{2,1}-x_{3,1}-2 x_{3,2}-x_{3,3}+2 <= 0
-x_{1,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+2 <= 0
-3 x_{1,1}-6 x_{2,1}-3 x_{2,2}-2 x_{3,1}+x_{3,2}+x_{3,3}+5 <= 0
-2 x_{1,1}-3 x_{2,1}-2 x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}+5 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+3 <= 0
-3 x_{1,1}-3 x_{2,1}-3 x_{2,2}-x_{3,1}-x_{3,2}+2 x_{3,3}+4 <= 0
"""

THETA1_234_ADDITIONAL = """
x_{2,2}-x_{3,1} <= 0
x_{3,2}-x_{2,1} <= 0
x_{3,3}-x_{2,2} <= 0
-x_{1,1}-x_{2,1}+1 <= 0
-x_{1,1}-x_{3,1}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}+1 <= 0
-3 x_{1,1}-2 x_{3,1}+x_{3,2}+x_{3,3}+2 <= 0
3 x_{2,2}-2 x_{3,1}+x_{3,2}+x_{3,3}-1 <= 0
-x_{1,1}+x_{2,2}-x_{3,1}-x_{3,2}+1 <= 0
x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
-3 x_{1,1}-2 x_{2,1}-3 x_{3,1}-2 x_{3,2}-2 x_{3,3}+5 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,3}+2 <= 0
-x_{1,1}-x_{2,1}-x_{3,1}-x_{3,2}-x_{3,3}+2 <= 0
-3 x_{1,1}+3 x_{2,2}-x_{3,1}-x_{3,2}+2 x_{3,3}+1 <= 0
-4 x_{1,1}+x_{2,1}+5 x_{2,2}-5 x_{3,1}-5 x_{3,2}-x_{3,3}+4 <= 0
-4 x_{1,1}+x_{2,1}+5 x_{2,2}-5 x_{3,1}-5 x_{3,2}-x_{3,3}+4 <= 0
-3 x_{1,1}-3 x_{2,1}-3 x_{2,2}-x_{3,1}+2 x_{3,2}-x_{3,3}+4 <= 0
"""

GENERIC_235 = """
x_{1,1}-1 <= 0
-x_{1,1} <= 0
-x_{2,2} <= 0
-x_{3,4} <= 0
1-2 x_{1,1} <= 0
x_{2,1}+x_{2,2}-1 <= 0
x_{2,2}-x_{2,1} <= 0
x_{3,2}-x_{3,1} <= 0
x_{3,3}-x_{3,2} <= 0
x_{3,4}-x_{3,3} <= 0
-x_{2,1}-2 x_{2,2}+1 <= 0
x_{2,1}-x_{3,1}-x_{3,2} <= 0
x_{3,1}+x_{3,2}+x_{3,3}+x_{3,4}-1 <= 0
x_{1,1}+x_{2,2}-x_{3,1}+x_{3,4}-1 <= 0
x_{1,1}-x_{2,2}-x_{3,1}-x_{3,3} <= 0
x_{1,1}-x_{2,1}-x_{3,2}-x_{3,3} <= 0
x_{1,1}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
x_{1,1}+x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}-1 <= 0
-x_{1,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
-x_{2,1}-x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{3,1}-x_{3,2}-x_{3,3}-2 x_{3,4}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,2}+x_{3,4} <= 0
x_{1,1}-x_{2,1}-x_{3,1}-x_{3,2}+x_{3,4} <= 0
-x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
x_{1,1}+x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4} <= 0
x_{1,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}+x_{3,3}+2 x_{3,4} <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}-1 <= 0
x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-1 <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4}-1 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3} <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4} <= 0
x_{1,1}-x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,4}+1 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-x_{2,1}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-x_{2,2}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}+x_{3,4}+2 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,2}-2 x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-2 x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
x_{1,1}+x_{2,1}-x_{2,2}-3 x_{3,1}-2 x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}+x_{2,2}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-2 x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-3 x_{3,1}-2 x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}-x_{2,1}+x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
"""

UPSILON1_235_ADDITIONAL = """
-x_{2,1}-x_{2,2}-x_{3,1}+1 <= 0
-x_{1,1}-x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}-x_{2,1}-x_{3,1}+x_{3,4}+1 <= 0
-x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}+x_{3,4}+2 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-2 x_{3,1}-2 x_{3,2}-2 x_{3,3}+3 <= 0
-x_{1,1}-2 x_{2,1}-2 x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+3 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}+2 <= 0
-x_{1,1}-x_{2,1}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+3 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+3 <= 0
"""

GENERIC_236 = """
x_{1,1}-1 <= 0
-x_{1,1} <= 0
-x_{2,2} <= 0
-x_{3,5} <= 0
1-2 x_{1,1} <= 0
x_{2,1}+x_{2,2}-1 <= 0
x_{2,2}-x_{2,1} <= 0
x_{3,2}-x_{3,1} <= 0
x_{3,3}-x_{3,2} <= 0
x_{3,4}-x_{3,3} <= 0
x_{3,5}-x_{3,4} <= 0
-x_{2,1}-2 x_{2,2}+1 <= 0
-x_{2,1}+x_{3,4}+x_{3,5} <= 0
x_{2,1}-x_{3,1}-x_{3,2} <= 0
x_{3,1}+x_{3,2}+x_{3,3}+x_{3,4}+x_{3,5}-1 <= 0
x_{1,1}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
-x_{1,1}+x_{2,2}-x_{3,1}+x_{3,4}+x_{3,5} <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
x_{1,1}-x_{2,1}-x_{3,1}-x_{3,2}+x_{3,4} <= 0
x_{1,1}-x_{2,2}-x_{3,1}-x_{3,2}+x_{3,5} <= 0
x_{1,1}-x_{2,1}-x_{3,1}-x_{3,3}+x_{3,5} <= 0
-x_{1,1}+x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}+x_{3,5} <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}+x_{3,4}+x_{3,5} <= 0
-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}-2 x_{3,5}+1 <= 0
x_{1,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,5} <= 0
-x_{1,1}+x_{2,1}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}+x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+x_{3,5} <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}+x_{3,3}+x_{3,4}+2 x_{3,5} <= 0
-x_{1,1}-x_{2,1}+x_{2,2}-x_{3,1}+x_{3,3}+x_{3,4}+2 x_{3,5} <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+x_{3,5} <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+x_{3,5} <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4}+x_{3,5} <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}+x_{3,4}-x_{3,5}+1 <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+x_{3,5}+1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}+x_{3,3}+2 x_{3,4}+x_{3,5}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,5}+1 <= 0
x_{1,1}-x_{2,1}-x_{3,1}-2 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+1 <= 0
x_{1,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+1 <= 0
x_{1,1}+x_{2,1}+x_{2,2}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}-x_{3,5} <= 0
-x_{1,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+2 <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5} <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5} <= 0
x_{1,1}+2 x_{2,1}+x_{2,2}-3 x_{3,1}-2 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5} <= 0
x_{1,1}+x_{2,1}-x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5}+1 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-3 x_{3,3}-2 x_{3,4}-x_{3,5}+2 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}-3 x_{3,2}-2 x_{3,3}-2 x_{3,4}-x_{3,5}+2 <= 0
-x_{1,1}+x_{2,1}-x_{2,2}-2 x_{3,1}-3 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5}+2 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5}+1 <= 0
-x_{1,1}+2 x_{2,1}+x_{2,2}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+1 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{3,1}-2 x_{3,2}-3 x_{3,3}-2 x_{3,4}-x_{3,5}+3 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-x_{3,1}-3 x_{3,2}-2 x_{3,3}-2 x_{3,4}-x_{3,5}+3 <= 0
"""

PHI0_244_ADDITIONAL = """
x_{2,2}+x_{2,3}-x_{3,1}-x_{3,2} <= 0
-x_{2,1}-x_{2,2}+x_{3,2}+x_{3,3} <= 0
-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}+1 <= 0
"""

GAMMA1_245_ADDITIONAL = """
-x_{2,1}-x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
x_{1,1}+x_{2,2}+2 x_{2,3}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4} <= 0
x_{1,1}-x_{2,1}+x_{2,2}-x_{2,3}-3 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
x_{1,1}-2 x_{2,1}-2 x_{2,2}-x_{2,3}-2 x_{3,1}-x_{3,2}-3 x_{3,3}-x_{3,4}+2 <= 0
x_{1,1}-2 x_{2,1}-2 x_{2,2}-x_{2,3}-x_{3,1}-3 x_{3,2}-2 x_{3,3}-x_{3,4}+2 <= 0
"""

GAMMA0_245_ADDITIONAL = """
x_{2,3}-x_{3,1} <= 0
x_{3,3}-x_{2,1} <= 0
x_{3,4}-x_{2,2} <= 0
x_{3,4}-x_{2,2} <= 0
-x_{1,1}-x_{2,2}-x_{3,1}+1 <= 0
-x_{1,1}-x_{2,1}-x_{3,2}+1 <= 0
-x_{1,1}-x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}+x_{2,2}+x_{2,3}-x_{3,1}+x_{3,4} <= 0
-x_{2,1}-x_{2,2}-x_{2,3}-x_{3,2}+1 <= 0
-x_{2,1}-x_{2,3}-x_{3,1}-x_{3,2}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,3}+1 <= 0
-x_{2,1}-x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
x_{2,1}+x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
x_{2,1}+x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
-x_{1,1}-x_{2,1}+x_{2,3}-x_{3,1}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,2}-x_{3,1}-2 x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}+x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{1,1}-x_{2,2}-x_{2,3}-x_{3,1}+x_{3,4}+1 <= 0
-9 x_{2,1}-4 x_{2,2}-9 x_{3,1}-5 x_{3,2}-9 x_{3,3}+9 <= 0
-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-3 x_{1,1}-4 x_{2,2}-3 x_{2,3}-3 x_{3,1}+4 x_{3,4}+3 <= 0
-x_{1,1}+x_{2,2}+2 x_{2,3}-x_{3,1}-x_{3,2}+x_{3,4} <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-x_{2,3}-x_{3,1}-x_{3,3}+2 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{2,3}-x_{3,2}-x_{3,3}+2 <= 0
-x_{1,1}-x_{2,1}-x_{2,3}-2 x_{3,1}-x_{3,2}-x_{3,3}+2 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,4}+2 <= 0
-x_{1,1}-x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}+x_{2,2}+x_{2,3}-x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}+x_{2,3}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-4 x_{1,1}+x_{2,2}+5 x_{2,3}-5 x_{3,1}-4 x_{3,2}-5 x_{3,3}+x_{3,4}+4 <= 0
-x_{1,1}+x_{2,2}+2 x_{2,3}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}-x_{2,1}+x_{2,3}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-x_{1,1}+x_{2,1}+2 x_{2,3}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}-x_{2,2}-6 x_{2,3}-7 x_{3,1}-8 x_{3,2}-7 x_{3,3}-6 x_{3,4}+7 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,4}+2 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+2 <= 0
-2 x_{1,1}-4 x_{2,1}-2 x_{2,2}-2 x_{2,3}+x_{3,1}-x_{3,2}-x_{3,3}+x_{3,4}+3 <= 0
-4 x_{1,1}-8 x_{2,1}-8 x_{2,2}-4 x_{2,3}-3 x_{3,1}+x_{3,2}+5 x_{3,3}-3 x_{3,4}+7 <= 0
-3 x_{1,1}+x_{2,1}-2 x_{2,2}-2 x_{2,3}-4 x_{3,1}-x_{3,2}-x_{3,3}+2 x_{3,4}+3 <= 0
-2 x_{1,1}-2 x_{2,1}-2 x_{2,2}-x_{2,3}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-2 x_{3,4}+4 <= 0
-x_{1,1}-2 x_{2,1}-x_{2,2}-x_{2,3}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}+3 <= 0
"""

THETA0_246_ADDITIONAL = """
-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}+1 <= 0
"""

THETA1_246_ADDITIONAL = """
x_{2,3}-x_{3,1} <= 0
x_{3,3}-x_{2,1} <= 0
x_{3,4}-x_{2,2} <= 0
x_{3,5}-x_{2,3} <= 0
-x_{1,1}+x_{2,1}+x_{2,3}-x_{3,1}+x_{3,5} <= 0
-x_{2,1}-x_{2,2}-x_{2,3}-x_{3,2}+1 <= 0
4 x_{2,3}-3 x_{3,1}+x_{3,2}+x_{3,3}+x_{3,4}-1 <= 0
x_{2,1}+x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
x_{2,1}+x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3} <= 0
-x_{1,1}+x_{2,1}-2 x_{3,1}-x_{3,2}-x_{3,3}+1 <= 0
-x_{1,1}-x_{2,2}-x_{2,3}-x_{3,1}+x_{3,4}+1 <= 0
-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{2,2}-x_{2,3}-x_{3,1}-x_{3,2}-x_{3,4}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
-x_{1,1}+x_{2,1}+x_{2,3}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+1 <= 0
2 x_{2,1}+2 x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3}+x_{3,4}+x_{3,5}-1 <= 0
x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+1 <= 0
-3 x_{1,1}-x_{2,1}-2 x_{2,3}-3 x_{3,1}-2 x_{3,2}+x_{3,4}+2 x_{3,5}+3 <= 0
x_{2,1}+x_{2,2}+x_{2,3}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}-x_{3,5} <= 0
-5 x_{1,1}-4 x_{2,1}-4 x_{2,2}-5 x_{3,1}-5 x_{3,2}-4 x_{3,3}-4 x_{3,4}+9 <= 0
-x_{1,1}-x_{2,2}-x_{2,3}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,5}+2 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-2 x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+2 <= 0
-x_{1,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}-x_{3,5}+2 <= 0
-x_{1,1}-x_{2,2}-2 x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}-x_{3,5}+2 <= 0
-5 x_{2,2}-5 x_{2,3}-2 x_{3,1}-2 x_{3,2}+3 x_{3,3}-2 x_{3,4}+3 x_{3,5}+2 <= 0
-5 x_{1,1}+5 x_{2,1}-6 x_{3,1}-x_{3,2}-x_{3,3}+4 x_{3,4}+4 x_{3,5}+1 <= 0
x_{1,1}+x_{2,1}+2 x_{2,2}+2 x_{2,3}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}-1 <= 0
x_{1,1}+2 x_{2,1}+x_{2,2}+2 x_{2,3}-2 x_{3,1}-2 x_{3,2}-x_{3,3}-x_{3,4}-1 <= 0
-2 x_{1,1}-4 x_{2,1}-2 x_{2,2}-2 x_{2,3}-x_{3,1}+x_{3,2}+x_{3,3}-x_{3,4}+3 <= 0
-9 x_{1,1}-9 x_{2,1}-9 x_{2,2}-10 x_{3,1}-10 x_{3,2}-10 x_{3,3}-11 x_{3,4}-x_{3,5}-19 <= 0
-9 x_{2,1}-10 x_{2,2}-x_{2,3}-x_{3,1}-9 x_{3,2}-10 x_{3,3}-9 x_{3,4}-x_{3,5}+10 <= 0
-2 x_{1,1}-2 x_{2,1}-x_{2,2}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-2 x_{3,4}-x_{3,5}+4 <= 0
-5 x_{1,1}-10 x_{2,1}-5 x_{2,2}-5 x_{2,3}-4 x_{3,1}+x_{3,2}+x_{3,3}-4 x_{3,4}+x_{3,5}+9 <= 0
-2 x_{1,1}-5 x_{2,1}-3 x_{2,2}-3 x_{2,3}+x_{3,1}-2 x_{3,2}-x_{3,3}+x_{3,4}+x_{3,5}+4 <= 0
-5 x_{1,1}-5 x_{2,1}-5 x_{2,2}-x_{3,1}-x_{3,2}-x_{3,3}-x_{3,4}+4 x_{3,5}+6 <= 0
-x_{1,1}+x_{2,1}+2 x_{2,2}+2 x_{2,3}-2 x_{3,1}-3 x_{3,2}-2 x_{3,3}-2 x_{3,4}-x_{3,5}+1 <= 0
-2 x_{1,1}-4 x_{2,1}-2 x_{2,2}-x_{2,3}-2 x_{3,1}-3 x_{3,2}-x_{3,3}-2 x_{3,4}-x_{3,5}+6 <= 0
-3 x_{1,1}-6 x_{2,1}-3 x_{2,2}-3 x_{2,3}-x_{3,1}-4 x_{3,2}-4 x_{3,3}-x_{3,4}-x_{3,5}+7 <= 0
-x_{1,1}-x_{2,1}-2 x_{2,2}-x_{2,3}-2 x_{3,1}-x_{3,2}-2 x_{3,3}-x_{3,4}-x_{3,5}+3 <= 0
"""

UPPERTRI_333 = """
x_{1,2}-x_{2,1} <= 0
x_{2,2}-x_{1,1} <= 0
x_{1,2}-x_{3,1} <= 0
x_{2,2}-x_{3,1} <= 0
x_{3,2}-x_{1,1} <= 0
x_{3,2}-x_{2,1} <= 0
-x_{1,1}-x_{2,1}+1 <= 0
-x_{1,1}-x_{3,1}+1 <= 0
-x_{2,1}-x_{3,1}+1 <= 0
-x_{1,2}+x_{2,1}-x_{3,1} <= 0
x_{1,1}-x_{2,2}-x_{3,1} <= 0
-x_{1,2}-x_{2,1}+x_{3,1} <= 0
-x_{1,1}-x_{2,2}+x_{3,1} <= 0
x_{1,1}-x_{2,1}-x_{3,2} <= 0
-x_{1,1}+x_{2,1}-x_{3,2} <= 0
-x_{1,2}-x_{2,2}+x_{3,2} <= 0
-x_{1,1}-x_{1,2}-x_{2,2}+1 <= 0
-x_{1,1}-x_{1,2}-x_{3,2}+1 <= 0
-x_{2,1}-x_{2,2}-x_{3,2}+1 <= 0
x_{1,2}+x_{2,2}-x_{3,1}-x_{3,2} <= 0
x_{1,2}-x_{2,1}-x_{2,2}+x_{3,2} <= 0
-x_{1,1}-x_{1,2}+x_{2,2}+x_{3,2} <= 0
x_{1,1}+x_{1,2}-x_{2,2}-x_{3,1}-x_{3,2} <= 0
-x_{1,2}+x_{2,1}+x_{2,2}-x_{3,1}-x_{3,2} <= 0
-x_{1,1}-x_{1,2}-x_{2,1}-x_{2,2}+x_{3,1}+1 <= 0
-x_{1,1}-x_{1,2}+x_{2,1}-x_{3,1}-x_{3,2}+1 <= 0
x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}+1 <= 0
-x_{1,1}-x_{1,2}-x_{2,1}-x_{2,2}-x_{3,1}+2 <= 0
-x_{1,1}-x_{1,2}-x_{2,1}-x_{3,1}-x_{3,2}+2 <= 0
-x_{1,1}-x_{2,1}-x_{2,2}-x_{3,1}-x_{3,2}+2 <= 0
"""
