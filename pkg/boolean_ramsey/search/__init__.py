from boolean_ramsey.search.problem import AvoidanceProblem, FixedPalette, RainbowMode, SearchOutcome
from boolean_ramsey.search.engine import certify, decide
from boolean_ramsey.search.ramsey import RamseyResult, rainbow_ramsey, ramsey
from boolean_ramsey.search.oracle import naive_decide, restricted_growth_strings
