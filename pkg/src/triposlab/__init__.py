"""Finite-model laboratory for tripos presentations and implicative algebras.

The package takes a finite proposition set with coded connectives,
quantifier tables, and a filter, checks every law such a presentation must
satisfy to be a tripos, extracts an implicative algebra from a passing
presentation, and certifies that the extracted algebra induces an isomorphic
presentation.
"""

from ._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .errors import TriposLabError
from .extraction import (ExtractedAlgebra, check_extracted_codes, extract,
                         iso_check, roundtrip_report)
from .implicative import (ImpAlgebra, ImpStructure, combinators,
                          induced_tripos, validate_separator,
                          validate_structure)
from .laws import (check_beck_chevalley, check_core_laws,
                   check_quantifier_identities, replay_witness, run_all)
from .order import (FinHeyting, FinMap, FinPoset, FinPreorder,
                    lattice_structure, monotone_adjoints, reflect)
from .report import CheckBudget, LawEntry, LawReport
from .tripos import (CodedTripos, PredCode, PXResult, entails, exists_along,
                     forall_along, px, recode, subst)

__version__ = "0.1.0"
