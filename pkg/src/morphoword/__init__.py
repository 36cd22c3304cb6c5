"""Finite words, morphisms, (purely) morphic languages, lazy infinite words
and exact lower mechanical words."""

from .errors import (
    AlphabetMismatchError,
    EnumerationLimitError,
    FuelExhaustedError,
    MorphowordError,
    NotProlongableError,
    ParseError,
    VerificationError,
)
from .exact import Surd, exact_floor, format_exact, make_surd, parse_exact
from .languages import (
    LanguageSample,
    factor_closure,
    is_bounded_word,
    is_factorial,
    is_pushy,
    morphic_language_upto,
    purely_morphic_language_upto,
    pushy_power_check,
)
from .morphisms import (
    LetterClass,
    Morphism,
    apply,
    classify_letters,
    compose,
    incidence_matrix,
    is_prolongable,
    power,
)
from .streams import (
    InfiniteWord,
    PeriodicityReport,
    cycle,
    detect_periodicity,
    factor_complexity,
    fixed_point,
    from_function,
    is_prefix_of_stream,
    morph_image,
    occurs_in_prefix,
    prepend,
    word_language_upto,
)
from .sturmian import (
    aperiodicity_evidence,
    lower_mechanical_letter,
    lower_mechanical_word,
    rational_periodicity_check,
)
from .words import (
    Alphabet,
    Word,
    concat,
    conjugates,
    factors_upto,
    is_factor,
    is_prefix,
    primitive_root,
)

__version__ = "0.1.0"
