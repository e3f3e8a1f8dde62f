"""Two-prover zero-knowledge proofs for Subset Sum and 3SAT over a
relativistic homomorphic commitment scheme."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # build-tree layout: the extension sits on sys.path
    from _core import *  # noqa: F401,F403
