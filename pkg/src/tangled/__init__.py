"""Tangled diagrams, vacillating tableaux, and exact enumeration."""

from tangled.bijection import (
    ALL_MOVES,
    Move,
    VacillatingTableau,
    allowed_moves,
    beta,
    beta_inv,
    moves_of,
    phi,
    psi,
)
from tangled.enumeration import (
    SequenceTable,
    catalan,
    count_all,
    count_by_vt,
    count_matchings,
    count_no_isolated,
    f3_closed_form,
    gen_tangled,
    gen_vt,
    d23_table,
)
from tangled.tangle import (
    CROSSING,
    NESTING,
    PartialMatching,
    Resolution,
    TangledDiagram,
    arcs_cross,
    arcs_nest,
    classify,
    crossing_number,
    deflate,
    diagram,
    inflate,
    matching,
    max_crossing,
    max_nesting,
    nesting_number,
    validate,
)
from tangled.young import (
    Label,
    StandardTableau,
    rsk_extract,
    rsk_insert,
    shape_corners,
    tableau_place,
    tableau_remove,
)
