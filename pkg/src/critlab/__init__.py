"""critlab: edge-coloring criticality and even-factor laboratory.

Small-graph machinery for proper edge colorings (Kempe chains, the Delta+1
fan construction, exact chromatic-index search), critical edges and
k-critical graphs, even factors with their deficiency barriers, and
executable verifiers for the counting lemmas behind the even-factor
theorem, plus a deterministic batch harness over graph6 streams.
"""

from .errors import (CritlabError, FalsificationError, Graph6Error,
                     HypothesisError, UsageError)
from .graphs import (Edge, Graph, boundary_edge_count, boundary_edges, bridges,
                     compact, components, divalent_vertices, encode_graph6,
                     from_edges, is_bridgeless, is_connected,
                     is_minimal_edge_cut, is_stable, neighborhood,
                     parse_graph6)
from .coloring import (ChiResult, ColorResult, EdgeColoring, KempeChain,
                       align_missing, chromatic_index, color_exact,
                       color_minus_edge, enumerate_colorings, kempe_chain,
                       kempe_swap, missing_colors, present_colors,
                       vizing_color)
from .criticality import (CriticalityReport, EdgeVerdict, critical_subgraph,
                          is_critical_edge, is_k_critical)
from .evenfactor import (Barrier, BarrierResult, EvenFactor, FactorResult,
                         PropertyReport, check_properties, deficiency,
                         find_barrier, find_even_factor, is_even_factor,
                         normalize_barrier)
from .lemmas import (AuditVerdict, Lemma1Config, Lemma1Scan,
                     Lemma1Trace, Lemma2Result, Triple, combine_cut_colorings,
                     component_weight, cut_sides, cut_type,
                     find_lemma1_configs, lemma1_bound, lemma1_bound_check,
                     lemma1_trace, lemma2_check, theorem1_audit,
                     validate_lemma1_config)
from .harness import JobSpec, RunReport, filter_stream, run

__version__ = "0.1.0"
