"""Co-contraction of graphs and the induced maps between right-angled
Artin groups, with an exact word calculus to back them up."""

from .contraction_words import (
    default_contraction_word,
    is_contraction_element,
    is_contraction_sequence,
    is_contraction_word,
)
from .diagrams import Pairing, find_well_pairing, render_svg, validate_pairing
from .embeddings import (
    CoContractionSpec,
    Homomorphism,
    InjectivityReport,
    IntersectionReport,
    apply_hom,
    build_hom,
    check_well_defined,
    sample_injectivity,
    sample_intersection,
)
from .graphs import (
    Graph,
    common_neighbors,
    complement,
    induced_subgraph,
    is_anticonnected,
    is_connected,
    link,
    load_graph,
    make_family,
)
from .oracle import brute_force_equals
from .recognition import (
    find_induced_cycle,
    is_chordal,
    is_induced_cycle,
    is_isomorphic,
    is_weakly_chordal,
)
from .transform import (
    ChainStep,
    co_contract,
    co_contract_seq,
    cocontraction_chain,
    contract,
    merged_members,
    merged_vertex_name,
)
from .words import (
    QPairWitness,
    Word,
    concat,
    cyclic_reduce,
    equals,
    find_q_pair,
    in_parabolic,
    inverse,
    normal_form,
    parse_word,
    power,
    random_reduced_word,
    support,
)

__version__ = "0.1.0"
