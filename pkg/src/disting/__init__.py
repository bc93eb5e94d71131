"""Distinguishing numbers of finite permutation group actions.

A coloring of a point set is distinguishing when the only group element
mapping every point to an equally colored point is the identity; the
distinguishing number of an action is the least palette size admitting one.
This package computes these numbers three ways and cross-checks the routes
against each other:

* exact formulas for product actions: the row/column symmetry of a grid
  (via the feasibility window ``fk(k, m) <= n <= k**m - fk(k, m)``) and
  wreath products (via counts of distinguishing colorings of the inner
  action);
* explicit construction of distinguishing grid colorings for every feasible
  shape, with a fast verifier;
* brute-force search over colorings and group elements, usable as an
  independent oracle for everything above.
"""

from .actions import (
    GridAction,
    GridElement,
    GroupAction,
    NaturalAction,
    WreathAction,
    WreathElement,
    apply,
    build_wreath_group,
    natural_alternating_action,
    natural_symmetric_action,
)
from .colorings import (
    Coloring,
    ColoringOrbitSet,
    count_distinguishing_colorings,
    distinguishing_number,
    is_color_preserving,
    is_distinguishing,
    orbit_representatives,
    wreath_coloring,
)
from .errors import CapExceededError, InfeasibleGridError
from .formulas import (
    INFINITE,
    an_wreath_number,
    binomial,
    direct_product_distinguishing_number,
    feasible_window,
    fk,
    grid_feasible,
    multinomial,
    nr_alternating,
    nr_symmetric,
    sn_wreath_number,
    table_values,
    wreath_distinguishing_number,
)
from .grids import (
    GridColoring,
    balanced_square_coloring,
    balanced_wide_coloring,
    complement,
    construct,
    extend,
    extension_capacity,
    feasible_oracle,
    square_coloring,
    transpose,
    verify,
)
from .groups import (
    FiniteGroup,
    alternating_group,
    closure,
    parse_generator_file,
    symmetric_group,
    trivial_group,
)
from .perms import Perm, compose, identity, inverse

__all__ = [
    "CapExceededError",
    "Coloring",
    "ColoringOrbitSet",
    "FiniteGroup",
    "GridAction",
    "GridColoring",
    "GridElement",
    "GroupAction",
    "INFINITE",
    "InfeasibleGridError",
    "NaturalAction",
    "Perm",
    "WreathAction",
    "WreathElement",
    "alternating_group",
    "an_wreath_number",
    "apply",
    "balanced_square_coloring",
    "balanced_wide_coloring",
    "binomial",
    "build_wreath_group",
    "closure",
    "complement",
    "compose",
    "construct",
    "count_distinguishing_colorings",
    "direct_product_distinguishing_number",
    "distinguishing_number",
    "extend",
    "extension_capacity",
    "feasible_oracle",
    "feasible_window",
    "fk",
    "grid_feasible",
    "identity",
    "inverse",
    "is_color_preserving",
    "is_distinguishing",
    "multinomial",
    "natural_alternating_action",
    "natural_symmetric_action",
    "nr_alternating",
    "nr_symmetric",
    "orbit_representatives",
    "parse_generator_file",
    "sn_wreath_number",
    "square_coloring",
    "symmetric_group",
    "table_values",
    "transpose",
    "trivial_group",
    "verify",
    "wreath_coloring",
    "wreath_distinguishing_number",
]
