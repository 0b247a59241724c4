__all__ = (
    # errors
    'BraidError', 'IndexRangeError', 'NotPureError', 'ParseError',
    'ResourceLimitError', 'StrandMismatchError', 'UnknownCheckError',
    # config
    'DEFAULT_LIMITS', 'DEFAULT_MAX_FREE_LEN', 'DEFAULT_MAX_STEPS', 'Limits',
    # braid_core
    'BraidWord', 'Permutation',
    'concat', 'format_braid', 'free_cancel', 'invert', 'is_pure',
    'perm', 'power', 'reflect', 'sigma',
    # word_oracle
    'FreeAutomorphism', 'FreeWord',
    'artin_action', 'compare', 'equal', 'find_handle', 'handle_reduce',
    'has_handle', 'is_trivial', 'is_trivial_dehornoy', 'sigma_sign',
    # pure_braid
    'AbelianVector', 'PureLetter', 'PureWord',
    'a0', 'abelianize', 'comb', 'expand', 'exponent_sum', 'format_pure',
    'full_twist', 'generator', 'linking_vector', 'standard_pairs', 'standardize',
    # maps
    'GeneratorMap',
    'apply_map', 'boundary', 'boundary_braid', 'commutator', 'conjugate',
    'delete_strand', 'face', 'identity_map', 'theta', 'theta_inv',
    'theta_inv_map', 'theta_map', 'transposition_conjugator',
    'transversal_conjugator', 'w_automorphism', 'w_map', 'w_simplified',
    # brunnian
    'SamplerParams',
    'in_z', 'is_brunnian', 'random_pure_word', 'sample_bd', 'sample_bd_direct',
    'sample_brun', 'sample_brun3_alt', 'sample_closure', 'sample_symmetric_commutator',
    # verifier
    'CATALOG', 'NEGATIVE_CONTROLS', 'CheckReport', 'Status', 'run_all', 'run_check',
    # report
    'dump_json', 'format_reports', 'format_rows', 'summarize',
    # expression
    'Expression', 'evaluate', 'evaluate_pure', 'parse',
)

from .errors import (
    BraidError, IndexRangeError, NotPureError, ParseError,
    ResourceLimitError, StrandMismatchError, UnknownCheckError,
)
from .config import DEFAULT_LIMITS, DEFAULT_MAX_FREE_LEN, DEFAULT_MAX_STEPS, Limits
from .braid_core import (
    BraidWord, Permutation,
    concat, format_braid, free_cancel, invert, is_pure,
    perm, power, reflect, sigma,
)
from .word_oracle import (
    FreeAutomorphism, FreeWord,
    artin_action, compare, equal, find_handle, handle_reduce,
    has_handle, is_trivial, is_trivial_dehornoy, sigma_sign,
)
from .pure_braid import (
    AbelianVector, PureLetter, PureWord,
    a0, abelianize, comb, expand, exponent_sum, format_pure,
    full_twist, generator, linking_vector, standard_pairs, standardize,
)
from .maps import (
    GeneratorMap,
    apply_map, boundary, boundary_braid, commutator, conjugate,
    delete_strand, face, identity_map, theta, theta_inv,
    theta_inv_map, theta_map, transposition_conjugator,
    transversal_conjugator, w_automorphism, w_map, w_simplified,
)
from .brunnian import (
    SamplerParams,
    in_z, is_brunnian, random_pure_word, sample_bd, sample_bd_direct,
    sample_brun, sample_brun3_alt, sample_closure, sample_symmetric_commutator,
)
from .verifier import CATALOG, NEGATIVE_CONTROLS, CheckReport, Status, run_all, run_check
from .report import dump_json, format_reports, format_rows, summarize
from .expression import Expression, evaluate, evaluate_pure, parse
