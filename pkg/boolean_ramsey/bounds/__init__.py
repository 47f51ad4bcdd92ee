from boolean_ramsey.bounds.shapes import Shape, shapes
from boolean_ramsey.bounds.ramsey_k import (
    default_interval_budgets,
    known_values,
    rk_bounds,
    rk_lower,
    rk_upper,
)
from boolean_ramsey.bounds.table import n_threshold, table_match, table_value
from boolean_ramsey.bounds.formulas import (
    Bound,
    BoundsReport,
    VeeWedgeBounds,
    bounds_report,
    lower_bounds,
    lubell,
    upper_bounds,
    vee_wedge_bounds,
)
