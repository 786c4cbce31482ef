"""Exact computations with the quantum Lie algebra (sl2)_h inside U_q(sl2)."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ClosureError,
    DimensionError,
    DivisionByZero,
    ParseError,
    PoleError,
    QLieError,
    TwistError,
)
from .qcoeff import (  # noqa: E402
    ONE,
    Q,
    S,
    ZERO,
    ExtScalar,
    HSeries,
    RatFuncQ,
    arith,
    eval_q1,
    h_series,
    qconj,
    scalar,
)
from .pbw import (  # noqa: E402
    E,
    F,
    K,
    KINV,
    AdWord,
    AlgElement,
    ad_apply,
    ad_letter,
    casimir,
    commutator,
    mul,
    normalize_word,
)
from .core import (  # noqa: E402
    BASIS,
    HH,
    XM,
    XP,
    Embedding,
    QLieVector,
    StructureTable,
    bracket,
    check_qantisymmetry,
    classical_limit,
    decompose,
    expected_table,
    qconj_L,
    standard_embedding,
    structure_table,
    twisted_embedding,
)
from .rep import (  # noqa: E402
    MatConjugation,
    Representation,
    builtin_rep2,
    mat_qconj,
    qcommutator,
    verify_representation,
)
from .parser import eval_ast, evaluate, parse, to_adword  # noqa: E402
from .render import render  # noqa: E402
