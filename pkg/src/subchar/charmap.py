"""Per-character encodings for Chinese text.

A mapping table assigns every covered character a short base encoding:
a romanized pronunciation with a tone digit (``chi1``), a bopomofo
syllable with a tone digit, a glyph decomposition over a small latin
alphabet (``rqcc``), a random five-digit code, or a computed UTF-8 byte
string. Characters sharing a base encoding form a homophone (or, for
glyph schemes, collision) group; with ``use_index`` enabled each member
additionally carries its 1-based rank inside the group so the full form
is unique. Serialized forms end with ``#`` so a stream of them can be
cut back into characters without a dictionary.

Mapping files are two-column TSV, ``<character><TAB><base>``, with
``%``-prefixed comment lines. The byte scheme needs no file, and the
``raw`` and ``char`` kinds encode nothing at all (identity), existing so
that character-level and plain-subword baselines run through the same
machinery.
"""

from __future__ import annotations

import hashlib
import os
import random
import re
from dataclasses import dataclass, field
from importlib import resources

__all__ = [
    "EncodingScheme",
    "EncodingTable",
    "EncodedForm",
    "MappingFileError",
    "UnknownFormError",
    "AmbiguousFormError",
    "SCHEME_KINDS",
    "PRONUNCIATION_KINDS",
    "GLYPH_KINDS",
    "TERMINATOR",
    "ESCAPE",
    "is_cjk",
    "load_table",
    "builtin_table",
    "encode_char",
    "decode_form",
    "homophones_of",
    "gen_random_map",
    "write_mapping_file",
    "default_data_dir",
]

TERMINATOR = "#"
# Escape marker for pipeline streams. Sits in the private use area so it
# cannot collide with any serialization alphabet; the marker itself gets
# escaped when it occurs in input.
ESCAPE = ""

PRONUNCIATION_KINDS = ("pinyin", "zhuyin")
GLYPH_KINDS = ("stroke", "wubi", "zhengma", "cangjie")
DIGIT_KINDS = ("byte", "random_index")
IDENTITY_KINDS = ("raw", "char")
SCHEME_KINDS = PRONUNCIATION_KINDS + GLYPH_KINDS + DIGIT_KINDS + IDENTITY_KINDS

# Same ranges BERT uses for its Chinese character heuristic.
_CJK_RANGES = (
    (0x4E00, 0x9FFF),
    (0x3400, 0x4DBF),
    (0x20000, 0x2A6DF),
    (0x2A700, 0x2B73F),
    (0x2B740, 0x2B81F),
    (0x2B820, 0x2CEAF),
    (0xF900, 0xFAFF),
    (0x2F800, 0x2FA1F),
)

_BASE_RE = {
    "pinyin": re.compile(r"^[a-z]+[1-5]$"),
    "zhuyin": re.compile(r"^[ㄅ-ㄯ]+[1-5]$"),
    "stroke": re.compile(r"^[a-z]+$"),
    "wubi": re.compile(r"^[a-z]+$"),
    "zhengma": re.compile(r"^[a-z]+$"),
    "cangjie": re.compile(r"^[a-z]+$"),
    "random_index": re.compile(r"^[0-9]{5}$"),
}


class MappingFileError(ValueError):
    """Raised when a mapping file is malformed."""


class UnknownFormError(KeyError):
    """Raised when a form decodes to no character in the table."""


class AmbiguousFormError(KeyError):
    """Raised when a form matches several characters (no index digits)."""

    def __init__(self, form: str, candidates: list[str]):
        super().__init__(form)
        self.form = form
        self.candidates = candidates

    def __str__(self) -> str:
        return f"form {self.form!r} is ambiguous: {' '.join(self.candidates)}"


def is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


@dataclass(frozen=True)
class EncodingScheme:
    """Which encoding to use and whether forms carry index digits."""

    kind: str
    use_index: bool = True

    def __post_init__(self) -> None:
        if self.kind not in SCHEME_KINDS:
            raise ValueError(f"unknown scheme kind {self.kind!r}")
        # Byte and random_index forms are unique without help, and the
        # identity kinds have no forms at all, so the flag is meaningless
        # there. Normalize so equality and manifests stay predictable.
        if self.kind in DIGIT_KINDS or self.kind in IDENTITY_KINDS:
            object.__setattr__(self, "use_index", False)

    @property
    def is_pronunciation(self) -> bool:
        return self.kind in PRONUNCIATION_KINDS

    @property
    def is_identity(self) -> bool:
        return self.kind in IDENTITY_KINDS

    @property
    def label(self) -> str:
        return self.kind + ("" if self.use_index else "-noindex")


@dataclass(frozen=True)
class EncodedForm:
    """One character's serialized encoding, split into its parts.

    ``body`` is the base without tone or index. Passthrough forms (kept
    verbatim, nothing known about the character) have ``terminated``
    False and empty tone and index.
    """

    body: str
    tone: int | None = None
    index: int | None = None
    terminated: bool = True

    @property
    def text(self) -> str:
        if not self.terminated:
            return self.body
        parts = [self.body]
        if self.tone is not None:
            parts.append(str(self.tone))
        if self.index is not None:
            parts.append(str(self.index))
        parts.append(TERMINATOR)
        return "".join(parts)

    def __str__(self) -> str:
        return self.text


def _byte_body(ch: str) -> str:
    return "_".join(str(b) for b in ch.encode("utf-8"))


def _byte_form(ch: str) -> EncodedForm:
    return EncodedForm(body=_byte_body(ch))


def _split_base(kind: str, base: str) -> tuple[str, int | None]:
    """Split a file base into (body, tone). Validates against the kind."""
    pat = _BASE_RE.get(kind)
    if pat is None or not pat.match(base):
        raise MappingFileError(f"invalid {kind} base {base!r}")
    if kind in PRONUNCIATION_KINDS:
        return base[:-1], int(base[-1])
    return base, None


class EncodingTable:
    """A loaded mapping table plus the derived lookup structures."""

    def __init__(
        self,
        scheme: EncodingScheme,
        bases: dict[str, str],
        fingerprint: str,
        source: bytes = b"",
    ):
        self.scheme = scheme
        self.bases = bases
        self.fingerprint = fingerprint
        # Raw mapping-file bytes, kept so bundles can copy the file
        # verbatim and the fingerprint survives a save/load cycle.
        self.source_bytes = source
        self.homophone_groups: dict[str, list[str]] = {}
        self._forms: dict[str, EncodedForm] = {}
        self._texts: dict[str, str] = {}
        self._reverse: dict[str, list[str]] = {}
        self._build()

    def _build(self) -> None:
        groups: dict[str, list[str]] = {}
        for ch, base in self.bases.items():
            groups.setdefault(base, []).append(ch)
        # Rank inside a group is 1-based codepoint order, so indices do
        # not depend on file line order.
        for base, chars in groups.items():
            chars.sort()
            self.homophone_groups[base] = chars
        use_index = self.scheme.use_index
        for base, chars in self.homophone_groups.items():
            body, tone = _split_base(self.scheme.kind, base)
            for rank, ch in enumerate(chars, start=1):
                form = EncodedForm(body=body, tone=tone, index=rank if use_index else None)
                self._forms[ch] = form
                self._texts[ch] = form.text
                self._reverse.setdefault(form.text, []).append(ch)
        alphabet = set("0123456789_" + TERMINATOR)
        for text in self._texts.values():
            alphabet.update(text)
        if self.scheme.is_identity:
            alphabet = set()
        self.alphabet = frozenset(alphabet)

    def __contains__(self, ch: str) -> bool:
        return ch in self.bases

    def __len__(self) -> int:
        return len(self.bases)

    def chars(self) -> list[str]:
        return sorted(self.bases)

    def encoded_text(self, ch: str) -> str | None:
        """Serialized form for a covered character, else None."""
        return self._texts.get(ch)


def _fingerprint_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def load_table(path: str | os.PathLike[str], scheme: EncodingScheme) -> EncodingTable:
    """Load a mapping file for a file-backed scheme.

    Raises MappingFileError on duplicate characters, non-CJK characters,
    or bases that do not fit the scheme's shape. For random_index tables
    the five-digit codes must be unique.
    """
    if scheme.kind == "byte" or scheme.is_identity:
        raise ValueError(f"scheme {scheme.kind!r} takes no mapping file")
    raw = open(path, "rb").read()
    bases: dict[str, str] = {}
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        if not line or line.startswith("%"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MappingFileError(f"{path}:{lineno}: expected 2 columns, got {len(parts)}")
        ch, base = parts
        if len(ch) != 1 or not is_cjk(ch):
            raise MappingFileError(f"{path}:{lineno}: {ch!r} is not a single CJK character")
        if ch in bases:
            raise MappingFileError(f"{path}:{lineno}: duplicate character {ch!r}")
        _split_base(scheme.kind, base)
        bases[ch] = base
    if scheme.kind == "random_index" and len(set(bases.values())) != len(bases):
        raise MappingFileError(f"{path}: random index codes are not unique")
    return EncodingTable(scheme, bases, _fingerprint_bytes(raw), source=raw)


def builtin_table(scheme: EncodingScheme, data_dir: str | None = None) -> EncodingTable:
    """Table for a scheme using bundled data (or SUBCHAR_DATA_DIR)."""
    if scheme.kind == "byte" or scheme.is_identity:
        return EncodingTable(scheme, {}, f"builtin:{scheme.kind}")
    name = scheme.kind + ".tsv"
    root = data_dir or default_data_dir()
    return load_table(os.path.join(root, name), scheme)


def default_data_dir() -> str:
    """Bundled data directory, overridable with SUBCHAR_DATA_DIR."""
    env = os.environ.get("SUBCHAR_DATA_DIR")
    if env:
        return env
    return str(resources.files("subchar").joinpath("data"))


def encode_char(table: EncodingTable, ch: str) -> EncodedForm:
    """Encode one character.

    Covered characters get their table form. CJK characters missing from
    the table fall back to the byte form so encoding never loses them.
    Everything else passes through verbatim (not terminated).
    """
    if len(ch) != 1:
        raise ValueError("encode_char takes a single character")
    form = table._forms.get(ch)
    if form is not None:
        return form
    if table.scheme.is_identity:
        return EncodedForm(body=ch, terminated=False)
    if is_cjk(ch):
        return _byte_form(ch)
    return EncodedForm(body=ch, terminated=False)


def _parse_byte_body(body: str) -> str | None:
    try:
        data = bytes(int(p) for p in body.split("_"))
    except ValueError:
        return None
    try:
        ch = data.decode("utf-8")
    except UnicodeDecodeError:
        return None
    if len(ch) == 1 and is_cjk(ch):
        return ch
    return None


def decode_form(table: EncodingTable, form: EncodedForm | str) -> str:
    """Map a serialized form back to its character.

    Accepts an EncodedForm or its text. Unterminated forms decode to
    themselves (passthrough). Byte-fallback forms decode under every
    scheme. Raises UnknownFormError for forms outside the table and
    AmbiguousFormError when index digits are off and several characters
    share the base.
    """
    if isinstance(form, EncodedForm):
        if not form.terminated:
            return form.body
        text = form.text
    else:
        text = form
        if not text.endswith(TERMINATOR):
            return text
    if table.scheme.is_identity:
        return text
    body = text[: -len(TERMINATOR)]
    if "_" in body:
        ch = _parse_byte_body(body)
        if ch is None:
            raise UnknownFormError(text)
        return ch
    if table.scheme.kind == "byte":
        ch = _parse_byte_body(body)
        if ch is None:
            raise UnknownFormError(text)
        return ch
    matches = table._reverse.get(text)
    if matches is None:
        raise UnknownFormError(text)
    if len(matches) > 1:
        raise AmbiguousFormError(text, matches)
    return matches[0]


def homophones_of(table: EncodingTable, ch: str) -> list[str]:
    """Other characters with the same base encoding, codepoint order.

    Defined for pronunciation schemes. Characters outside the table have
    no known pronunciation and get an empty list.
    """
    if not table.scheme.is_pronunciation:
        raise ValueError(f"homophones are not defined for {table.scheme.kind!r}")
    base = table.bases.get(ch)
    if base is None:
        return []
    return [c for c in table.homophone_groups[base] if c != ch]


def gen_random_map(chars: list[str], seed: int) -> dict[str, str]:
    """Assign each character a unique random five-digit code."""
    if len(chars) > 100000:
        raise ValueError("five digits cover at most 100000 characters")
    if len(set(chars)) != len(chars):
        raise ValueError("duplicate characters")
    rng = random.Random(seed)
    codes = rng.sample(range(100000), len(chars))
    return {ch: f"{code:05d}" for ch, code in zip(chars, codes)}


def write_mapping_file(path: str | os.PathLike[str], bases: dict[str, str], header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        if header:
            for line in header.splitlines():
                f.write(f"% {line}\n")
        for ch in sorted(bases):
            f.write(f"{ch}\t{bases[ch]}\n")
