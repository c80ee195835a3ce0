"""Extensions, acceptance and (contrastive) explanations for argumentation frameworks.

The abstract layer works on Dung frameworks (:class:`AF`); the structured
layer builds such a framework from rules and premises
(:func:`derive_af`) and explains formulas instead of arguments.
"""

from .aspic import (Attack, AttackKind, Literal, Presentation, Rule, StructuredArgument,
                    StructuredFramework, Theory, build_arguments, compute_attacks, derive_af)
from .contrastive import (ApplicabilityReport, ContrastiveResult, ContrastKind, Direction, Violation,
                          check_applicability, cont_acc, cont_nonacc, contrast, derive_foil)
from .errors import (ApplicabilityError, ArgumentationError, InputError, ParseError, PreconditionError,
                     UnknownArgumentError)
from .explanations import (Candidates, acc_explanation, acc_explanation_set, def_by, def_by_in,
                           nonacc_explanation, not_def)
from .formats import QueryResult, format_af, format_theory, parse_af, parse_theory
from .formulas import (check_formula_applicability, formula_acc_explanation, formula_contrastive,
                       formula_foil, formula_nonacc_explanation, formula_status)
from .framework import (AF, Relevance, conflict_free, conflict_relevant, defending_relevant, defends,
                        indirect_attackers, indirect_defenders, relevance)
from .semantics import (AcceptanceStatus, Semantics, Strategy, acceptance_status, ext_with, ext_without,
                        extensions, grounded_extension)

__version__ = "0.1.0"
