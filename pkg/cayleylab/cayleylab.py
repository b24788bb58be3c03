from .perm import Permutation, Transposition, CycleStructure, PermutationError, unrank, all_permutations
from .permgroup import GeneratedGroup, GroupFacts, group_facts, is_normal_in, intersection_is_trivial
from .permgroup import right_regular_representation, GroupError, NotSubgroupError, UndecidedError
from .tgraph import TranspositionSet, SimpleGraph, Girth, INFINITE, build_tgraph, is_connected, girth, is_tree
from .tgraph import graph_automorphisms, aut_sn_s, path_set, star_set, cycle_set, tree_from_pruefer
from .tgraph import GraphError, CapExceededError, GenerationError, HypothesisError, NotACycleError, ConsistencyError
from .autosearch import ColoredGraph, OrderedPartition, refine, automorphism_group
from .autosearch import vertex_stabilizer, pointwise_neighborhood_stabilizer
from .cayley import CayleyGraph, CyclePath, build_cayley, bfs_distances, bipartition_by_parity
from .cayley import count_4cycles_through, six_cycles_through_with_distance3, girth_cayley
from .theory import VerdictReport, check_lemma2, check_theorem4, check_feng_condition, check_theorem1
from .theory import check_ncycle_structure, full_report
from .settings import Settings, SettingsError
from .cli import parse_spec, SpecParseError
