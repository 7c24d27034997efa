"""Mapping tables, per-character encoding, and form decoding.

Fixed reference values (the 魑魅魍魉 glyph codes, the stroke strings,
the byte form) are frozen literally; breaking one means the bundled
data changed meaning, not that the test needs updating. Index ranks are
checked against an independent codepoint sort of the homophone group
rather than against stored expected strings.
"""

import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subchar.charmap import (
    ESCAPE,
    TERMINATOR,
    AmbiguousFormError,
    EncodedForm,
    EncodingScheme,
    MappingFileError,
    UnknownFormError,
    builtin_table,
    decode_form,
    default_data_dir,
    encode_char,
    gen_random_map,
    homophones_of,
    is_cjk,
    load_table,
    write_mapping_file,
)

ALL_KINDS = ("pinyin", "zhuyin", "stroke", "wubi", "zhengma", "cangjie", "byte", "random_index")
FILE_KINDS = tuple(k for k in ALL_KINDS if k != "byte")


@pytest.fixture(scope="module")
def tables():
    return {kind: builtin_table(EncodingScheme(kind)) for kind in ALL_KINDS}


# ---------------------------------------------------------------------------
# Frozen reference encodings
# ---------------------------------------------------------------------------

GLYPH_REFERENCE = {
    "wubi": {"魑": "rqcc", "魅": "rqci", "魍": "rqcn", "魉": "rqcw"},
    "zhengma": {"魑": "njlz", "魅": "njbk", "魍": "njld", "魉": "njoo"},
    "cangjie": {"魑": "hiyub", "魅": "hijd", "魍": "hibtv", "魉": "himob"},
}


def test_glyph_reference_codes(tables):
    for kind, expected in GLYPH_REFERENCE.items():
        for ch, base in expected.items():
            assert tables[kind].bases[ch] == base, (kind, ch)


def test_stroke_reference_strings(tables):
    # 鬼 is the shared left component, so both strings open with its
    # ten strokes.
    assert tables["stroke"].bases["魑"] == "pszhshpzznnhpnzsszshn"
    assert tables["stroke"].bases["魅"] == "pszhshpzznhhspn"
    assert tables["stroke"].bases["魑"].startswith("pszhshpzzn")
    assert tables["stroke"].bases["魅"].startswith("pszhshpzzn")


def test_stroke_collisions_exist(tables):
    # Stroke strings are not unique per character; 人 and 八 are both
    # a left-falling then a right-falling stroke.
    t = tables["stroke"]
    assert t.bases["人"] == t.bases["入"] == t.bases["八"] == "pn"
    assert encode_char(t, "人").text == "pn1#"
    assert encode_char(t, "入").text == "pn2#"
    assert encode_char(t, "八").text == "pn3#"


def test_byte_form_is_decimal_utf8(tables):
    assert encode_char(tables["byte"], "魑").text == "233_173_145#"
    assert decode_form(tables["byte"], "233_173_145#") == "魑"


def test_pinyin_reference_forms(tables):
    t = tables["pinyin"]
    assert t.bases["魑"] == "chi1"
    assert t.bases["魅"] == "mei4"
    assert t.bases["魍"] == "wang3"
    assert t.bases["魉"] == "liang3"


def test_zhuyin_reference_forms(tables):
    t = tables["zhuyin"]
    assert t.bases["魑"] == "ㄔ1"
    assert t.bases["魅"] == "ㄇㄟ4"
    assert t.bases["魍"] == "ㄨㄤ3"
    assert t.bases["魉"] == "ㄌㄧㄤ3"


def test_random_index_codes_are_five_digits(tables):
    t = tables["random_index"]
    for ch in t.chars():
        base = t.bases[ch]
        assert len(base) == 5 and base.isdigit(), ch
    codes = [t.bases[ch] for ch in t.chars()]
    assert len(set(codes)) == len(codes)


# ---------------------------------------------------------------------------
# Index ranks against an independent sort
# ---------------------------------------------------------------------------


def test_chi1_group_ranks_match_codepoint_sort(tables):
    t = tables["pinyin"]
    group = sorted(ch for ch in t.chars() if t.bases[ch] == "chi1")
    assert group == ["吃", "嗤", "痴", "魑"]
    for rank, ch in enumerate(group, start=1):
        assert encode_char(t, ch).text == f"chi1{rank}#"
    assert encode_char(t, "魑").text == "chi14#"


def test_index_is_codepoint_rank_for_every_group(tables):
    # random_index codes are unique, so index digits never apply there
    for kind in FILE_KINDS:
        if kind == "random_index":
            continue
        t = tables[kind]
        for base, chars in t.homophone_groups.items():
            assert chars == sorted(chars), (kind, base)
            for rank, ch in enumerate(chars, start=1):
                form = encode_char(t, ch)
                assert form.index == rank, (kind, ch)


def test_yi4_fixture_ranks(tmp_path):
    # A four-member group written in scrambled file order still ranks
    # by codepoint: 义 U+4E49, 异 U+5F02, 意 U+610F, 议 U+8BAE.
    path = tmp_path / "yi.tsv"
    path.write_text("意\tyi4\n义\tyi4\n议\tyi4\n异\tyi4\n", encoding="utf-8")
    t = load_table(path, EncodingScheme("pinyin"))
    assert encode_char(t, "义").text == "yi41#"
    assert encode_char(t, "异").text == "yi42#"
    assert encode_char(t, "意").text == "yi43#"
    assert encode_char(t, "议").text == "yi44#"
    assert decode_form(t, "yi42#") == "异"


def test_index_skipped_when_disabled(tables):
    t = builtin_table(EncodingScheme("pinyin", use_index=False))
    assert encode_char(t, "魑").text == "chi1#"
    assert encode_char(t, "吃").text == "chi1#"
    with pytest.raises(AmbiguousFormError) as exc:
        decode_form(t, "chi1#")
    assert exc.value.candidates == ["吃", "嗤", "痴", "魑"]


def test_digit_kinds_ignore_use_index_flag():
    assert EncodingScheme("byte", use_index=True).use_index is False
    assert EncodingScheme("random_index", use_index=True).use_index is False
    assert EncodingScheme("raw", use_index=True).use_index is False


# ---------------------------------------------------------------------------
# Encoding and decoding behavior
# ---------------------------------------------------------------------------


def test_uncovered_cjk_falls_back_to_bytes(tables):
    for kind in ALL_KINDS:
        t = tables[kind]
        if "龘" in t:
            continue
        form = encode_char(t, "龘")
        assert form.text == "_".join(str(b) for b in "龘".encode("utf-8")) + "#"
        assert decode_form(t, form) == "龘"


def test_non_cjk_passes_through(tables):
    for ch in ("a", "7", "，", " ", "#", ESCAPE):
        form = encode_char(tables["pinyin"], ch)
        assert form.terminated is False
        assert form.text == ch
        assert decode_form(tables["pinyin"], form) == ch


def test_identity_kinds_encode_nothing():
    for kind in ("raw", "char"):
        t = builtin_table(EncodingScheme(kind))
        assert t.alphabet == frozenset()
        for ch in ("魑", "a", "，"):
            form = encode_char(t, ch)
            assert form.terminated is False and form.text == ch
            assert decode_form(t, form) == ch


def test_round_trip_every_covered_character(tables):
    for kind in FILE_KINDS:
        t = tables[kind]
        for ch in t.chars():
            assert decode_form(t, encode_char(t, ch).text) == ch


def test_decode_rejects_unknown_forms(tables):
    t = tables["pinyin"]
    with pytest.raises(UnknownFormError):
        decode_form(t, "blorp3#")
    with pytest.raises(UnknownFormError):
        decode_form(t, "chi19#")
    with pytest.raises(UnknownFormError):
        # valid digits, not UTF-8 for a single CJK character
        decode_form(t, "233_173#")


def test_alphabet_covers_all_serialized_symbols(tables):
    for kind in FILE_KINDS:
        t = tables[kind]
        for ch in t.chars():
            for sym in encode_char(t, ch).text:
                assert sym in t.alphabet, (kind, ch, sym)
        # byte fallback symbols are always hazardous
        assert set("0123456789_" + TERMINATOR) <= t.alphabet


def test_encoded_form_text_layout():
    assert EncodedForm("chi", tone=1, index=4).text == "chi14#"
    assert EncodedForm("rqcc", index=1).text == "rqcc1#"
    assert EncodedForm("06966").text == "06966#"
    assert EncodedForm("x", terminated=False).text == "x"


def test_encode_char_rejects_strings(tables):
    with pytest.raises(ValueError):
        encode_char(tables["pinyin"], "魑魅")


# ---------------------------------------------------------------------------
# Homophones
# ---------------------------------------------------------------------------


def test_homophones_exclude_self_and_sort(tables):
    t = tables["pinyin"]
    assert homophones_of(t, "魑") == ["吃", "嗤", "痴"]
    assert homophones_of(t, "吃") == ["嗤", "痴", "魑"]


def test_homophones_empty_for_uncovered(tables):
    assert homophones_of(tables["pinyin"], "龘") == []


def test_homophones_rejects_glyph_schemes(tables):
    with pytest.raises(ValueError):
        homophones_of(tables["stroke"], "人")


def test_homophones_respect_tone(tables):
    # 妈 ma1 and 马 ma3 share a syllable but not a base.
    t = tables["pinyin"]
    assert "马" not in homophones_of(t, "妈")


# ---------------------------------------------------------------------------
# Mapping file loading
# ---------------------------------------------------------------------------


def write_lines(path, lines):
    path.write_text("".join(f"{l}\n" for l in lines), encoding="utf-8")


def test_load_table_skips_comments_and_blanks(tmp_path):
    p = tmp_path / "m.tsv"
    write_lines(p, ["% header", "", "吃\tchi1", "% more"])
    t = load_table(p, EncodingScheme("pinyin"))
    assert t.bases == {"吃": "chi1"}


def test_load_table_rejects_duplicates(tmp_path):
    p = tmp_path / "m.tsv"
    write_lines(p, ["吃\tchi1", "吃\tchi4"])
    with pytest.raises(MappingFileError, match="duplicate"):
        load_table(p, EncodingScheme("pinyin"))


def test_load_table_rejects_bad_shapes(tmp_path):
    cases = [
        ("pinyin", "吃\tchi"),  # no tone digit
        ("pinyin", "吃\tchi6"),  # tone out of range
        ("pinyin", "吃\tChi1"),  # uppercase
        ("stroke", "人\tpn1"),  # digits in a glyph base
        ("random_index", "吃\t123"),  # not five digits
        ("pinyin", "ab\tchi1"),  # not a single CJK char
        ("pinyin", "a\tchi1"),
        ("pinyin", "吃 chi1"),  # no tab
        ("pinyin", "吃\tchi1\tx"),  # extra column
    ]
    for kind, line in cases:
        p = tmp_path / "m.tsv"
        write_lines(p, [line])
        with pytest.raises(MappingFileError):
            load_table(p, EncodingScheme(kind))


def test_load_table_rejects_duplicate_random_codes(tmp_path):
    p = tmp_path / "m.tsv"
    write_lines(p, ["吃\t00001", "魑\t00001"])
    with pytest.raises(MappingFileError, match="unique"):
        load_table(p, EncodingScheme("random_index"))


def test_byte_scheme_takes_no_file(tmp_path):
    with pytest.raises(ValueError):
        load_table(tmp_path / "x.tsv", EncodingScheme("byte"))


def test_fingerprint_tracks_file_bytes(tmp_path):
    p = tmp_path / "m.tsv"
    write_lines(p, ["吃\tchi1"])
    a = load_table(p, EncodingScheme("pinyin")).fingerprint
    write_lines(p, ["吃\tchi2"])
    b = load_table(p, EncodingScheme("pinyin")).fingerprint
    assert a != b and len(a) == 64


def test_data_dir_env_override(tmp_path, monkeypatch):
    write_lines(tmp_path / "pinyin.tsv", ["吃\tchi1"])
    monkeypatch.setenv("SUBCHAR_DATA_DIR", str(tmp_path))
    assert default_data_dir() == str(tmp_path)
    t = builtin_table(EncodingScheme("pinyin"))
    assert len(t) == 1


def test_write_mapping_file_round_trips(tmp_path):
    bases = {"魑": "chi1", "吃": "chi1", "妈": "ma1"}
    p = tmp_path / "m.tsv"
    write_mapping_file(p, bases, header="test map\nsecond line")
    text = p.read_text(encoding="utf-8")
    assert text.startswith("% test map\n% second line\n")
    t = load_table(p, EncodingScheme("pinyin"))
    assert t.bases == bases


# ---------------------------------------------------------------------------
# Random map generation
# ---------------------------------------------------------------------------


def test_gen_random_map_deterministic():
    chars = ["吃", "魑", "妈"]
    a = gen_random_map(chars, seed=7)
    b = gen_random_map(chars, seed=7)
    c = gen_random_map(chars, seed=8)
    assert a == b
    assert a != c


def test_gen_random_map_unique_five_digit_codes():
    chars = [chr(cp) for cp in range(0x4E00, 0x4E00 + 500)]
    codes = gen_random_map(chars, seed=1)
    assert len(set(codes.values())) == 500
    assert all(len(v) == 5 and v.isdigit() for v in codes.values())


def test_gen_random_map_rejects_bad_input():
    with pytest.raises(ValueError):
        gen_random_map(["吃", "吃"], seed=1)
    with pytest.raises(ValueError):
        gen_random_map([chr(i) for i in range(100001)], seed=1)


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------

covered_pinyin = st.sampled_from(sorted(builtin_table(EncodingScheme("pinyin")).chars()))
any_char = st.characters(min_codepoint=1, blacklist_categories=("Cs",))


@settings(max_examples=200, deadline=None)
@given(ch=covered_pinyin)
def test_prop_pinyin_round_trip(tables, ch):
    t = tables["pinyin"]
    assert decode_form(t, encode_char(t, ch).text) == ch


@settings(max_examples=300, deadline=None)
@given(ch=any_char)
def test_prop_every_char_encodes_and_decodes(tables, ch):
    # Totality: encode never raises, decode inverts it, for any input
    # character at all.
    for kind in ("pinyin", "wubi", "byte"):
        t = tables[kind]
        form = encode_char(t, ch)
        assert decode_form(t, form) == ch
        if form.terminated:
            assert form.text.endswith(TERMINATOR)
        else:
            assert form.text == ch


@settings(max_examples=200, deadline=None)
@given(ch=any_char)
def test_prop_terminated_iff_cjk(tables, ch):
    form = encode_char(tables["pinyin"], ch)
    assert form.terminated == is_cjk(ch)
