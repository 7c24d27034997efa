"""Sub-character tokenization for Chinese text.

Characters map to pronunciation or glyph encodings, a subword model
splits the encoded stream, and everything round-trips: tokens know
which characters they came from and decode restores the normalized
input.  Includes homophone noise injection and corpus reporting.
"""

from .charmap import (
    AmbiguousFormError,
    EncodedForm,
    EncodingScheme,
    EncodingTable,
    MappingFileError,
    UnknownFormError,
    builtin_table,
    decode_form,
    encode_char,
    homophones_of,
    is_cjk,
    load_table,
)
from .cws import MaxMatchSegmenter, Segmenter, WordLexicon, build_lexicon, segment_words
from .noise import NoiseConfig, NoiseReport, inject, sweep
from .pipeline import (
    BundleError,
    TokenizedOutput,
    TokenizerSpec,
    decode,
    encode_text,
    load_bundle,
    normalize_text,
    save_bundle,
    tokenize,
    tokenize_batch,
    train_tokenizer,
)
from .subword import (
    SPECIALS,
    SubwordModel,
    TrainerConfig,
    TrainerError,
    VocabFileError,
    categorize,
    load_vocab,
    save_vocab,
    segment,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousFormError",
    "BundleError",
    "EncodedForm",
    "EncodingScheme",
    "EncodingTable",
    "MappingFileError",
    "MaxMatchSegmenter",
    "NoiseConfig",
    "NoiseReport",
    "SPECIALS",
    "Segmenter",
    "SubwordModel",
    "TokenizedOutput",
    "TokenizerSpec",
    "TrainerConfig",
    "TrainerError",
    "UnknownFormError",
    "VocabFileError",
    "WordLexicon",
    "builtin_table",
    "build_lexicon",
    "categorize",
    "decode",
    "decode_form",
    "encode_char",
    "encode_text",
    "homophones_of",
    "inject",
    "is_cjk",
    "load_bundle",
    "load_table",
    "load_vocab",
    "normalize_text",
    "save_bundle",
    "save_vocab",
    "segment",
    "segment_words",
    "sweep",
    "tokenize",
    "tokenize_batch",
    "train",
    "train_tokenizer",
    "__version__",
]
