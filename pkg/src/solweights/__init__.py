"""Exact finite-group computations around the Benson-Solomon 2-local systems.

Subpackages cover: a generic closure-based group engine (`groups`), the
finite fields and named groups everything is built from (`fields`, `zoo`),
defect-zero block counting by the double-coset rank formula (`robinson`),
degree-two mod-p cohomology certificates (`cohomology`), the concrete
2-local model at q = 5 and 25 (`solmodel`), the classification tables and
Hasse diagrams as data (`fusion_tables`), chain-poset functor cohomology
(`poset_limits`), and a batch CLI (`cli`).
"""

__version__ = "0.1.0"
