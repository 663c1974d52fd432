"""Free finite-group actions on handlebodies, treated algebraically:
classification up to equivalence, Seifert-fibered and hyperbolic closed
extensions with exact surgery data, covering-space presentations, and
first homology."""

from .actions import (ActionClass, EquivalenceWitness, HandlebodyAction,
                      actions_equivalent, classify_actions, load_action,
                      load_action_file, replay_witness, total_genus)
from .covers import (CosetTable, CoverPresentation, build_coset_table,
                     cover_h1, reidemeister_schreier)
from .errors import DomainError, InputError
from .groups import (FiniteGroup, conjugate_tuple, element_order,
                     group_exponent, group_from_permutations,
                     is_generating_tuple, load_group, subgroup_closure)
from .homology import (AbelianGroupStructure, GroupPresentation,
                       determinant, h1_from_presentation, h1_from_surgery,
                       load_presentation, load_presentation_file,
                       smith_normal_form)
from .hyperbolic import (HyperbolicDiagramSpec, build_hyperbolic_diagram,
                         hyperbolic_diagram, hyperbolic_twist_script)
from .seifert import (SeifertExtensionResult, SeifertInvariants,
                      build_seifert_extension, euler_number, keychain_diagram,
                      normalize_seifert, seifert_invariants_closed_form,
                      seifert_twist_script)
from .surgery import (INFINITY, Component, RationalCoefficient,
                      SurgeryDiagram, boundary_disc_twist, diagram_from_json,
                      load_diagram_file, rolfsen_twist, validate_diagram)
from .words import (FreeWord, NielsenMove, apply_nielsen_move,
                    attaching_words, evaluate_word, format_word, parse_word,
                    word_multiply)

__version__ = "0.1.0"
