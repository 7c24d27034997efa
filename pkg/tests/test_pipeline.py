"""End-to-end tokenizer behavior: offsets, round trips, bundles."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from subchar.charmap import (
    ESCAPE,
    AmbiguousFormError,
    EncodingScheme,
    builtin_table,
)
from subchar.cws import MaxMatchSegmenter, build_lexicon
from subchar.pipeline import (
    BundleError,
    MANIFEST_FILE,
    MAPPING_FILE,
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
from subchar.subword import UNK_ID, SubwordModel, TrainerConfig, categorize

TRAIN_LINES = [
    "魑魅魍魉，吃饭了吗？",
    "嗤之以鼻 chi is 吃",
    "痴人说梦 123 # magic",
    "魍魉出没的夜里只有魑魅",
    "吃了吗 吃了 吃饭",
] * 4


@pytest.fixture(scope="module")
def pinyin_table():
    return builtin_table(EncodingScheme("pinyin"))


@pytest.fixture(scope="module")
def pinyin_spec(pinyin_table):
    return train_tokenizer(TRAIN_LINES, pinyin_table, TrainerConfig(vocab_size=160))


@pytest.fixture(scope="module")
def noindex_spec():
    table = builtin_table(EncodingScheme("pinyin", use_index=False))
    return train_tokenizer(TRAIN_LINES, table, TrainerConfig(vocab_size=160))


def uniform_model(pieces):
    # Equal scores make one whole piece always beat any split of it.
    return SubwordModel("unigram", [(p, -2.0) for p in pieces])


def singles_model(text):
    return uniform_model(sorted(set(text)))


class TestNormalize:
    def test_nfc_composes(self):
        assert normalize_text("é") == "é"

    def test_folds_ascii_letters_only(self):
        assert normalize_text("Chi 吃 É Σ") == "chi 吃 É Σ"


class TestEncodeText:
    def test_escapes_alphabet_collisions(self, pinyin_table):
        assert encode_text(pinyin_table, "魑x魅") == f"chi14#{ESCAPE}xmei45#"
        assert encode_text(pinyin_table, "1#_") == f"{ESCAPE}1{ESCAPE}#{ESCAPE}_"
        assert encode_text(pinyin_table, ESCAPE) == ESCAPE + ESCAPE

    def test_safe_characters_pass_bare(self, pinyin_table):
        assert encode_text(pinyin_table, "，。 []") == "，。 []"

    def test_uncovered_cjk_falls_back_to_bytes(self, pinyin_table):
        assert encode_text(pinyin_table, "龘") == "233_190_152#"

    def test_identity_scheme_is_verbatim(self):
        table = builtin_table(EncodingScheme("raw"))
        assert encode_text(table, "魑x#1") == "魑x#1"


class TestTokenize:
    def test_passthrough_token_offsets_tile(self, pinyin_table):
        model = uniform_model(["chi14#", "mei45#", f"{ESCAPE}x"])
        out = tokenize(TokenizerSpec(pinyin_table, model), "魑x魅")
        assert out.tokens == ["chi14#", f"{ESCAPE}x", "mei45#"]
        assert out.offsets == [(0, 1), (1, 2), (2, 3)]
        assert out.char_to_tokens == [[0], [1], [2]]

    def test_combination_piece_covers_whole_idiom(self):
        table = builtin_table(EncodingScheme("wubi", use_index=False))
        piece = "rqcc#rqci#rqcn#rqcw#"
        model = uniform_model([piece])
        out = tokenize(TokenizerSpec(table, model), "魑魅魍魉")
        assert out.tokens == [piece]
        assert out.offsets == [(0, 4)]
        assert categorize(model, table)[piece] == "combination"

    def test_empty_string(self, pinyin_spec):
        out = tokenize(pinyin_spec, "")
        assert out.tokens == [] and out.ids == [] and out.offsets == []
        assert out.char_to_tokens == []

    def test_fragments_share_the_character_span(self, pinyin_table):
        model = singles_model("chi14#")
        out = tokenize(TokenizerSpec(pinyin_table, model), "魑")
        assert out.tokens == ["c", "h", "i", "1", "4", "#"]
        assert out.offsets == [(0, 1)] * 6
        assert out.char_to_tokens == [[0, 1, 2, 3, 4, 5]]

    def test_rejects_newlines(self, pinyin_spec):
        with pytest.raises(ValueError):
            tokenize(pinyin_spec, "a\nb")

    def test_oov_symbol_maps_to_unk_id_but_keeps_its_token(self, pinyin_spec):
        out = tokenize(pinyin_spec, "Ω")
        assert out.tokens == ["Ω"]
        assert out.ids == [UNK_ID]


MIXED = st.text(
    alphabet="魑魅魍魉吃嗤痴饭了吗龘xyZ19#＃，。 \t\\[]" + ESCAPE + "É",
    max_size=24,
)


def assert_tiles(text, out):
    n = len(normalize_text(text))
    assert len(out.char_to_tokens) == n
    covered = [set() for _ in range(n)]
    prev = (0, 0)
    for t, (a, b) in enumerate(out.offsets):
        assert 0 <= a < b <= n
        assert a >= prev[0]
        assert a <= prev[1]
        prev = (a, b)
        for p in range(a, b):
            covered[p].add(t)
    for p in range(n):
        assert covered[p] == set(out.char_to_tokens[p])
        assert covered[p]


class TestProperties:
    @settings(max_examples=120, deadline=None)
    @given(MIXED)
    def test_offsets_tile_and_match_char_map(self, pinyin_spec, text):
        assert_tiles(text, tokenize(pinyin_spec, text))

    @settings(max_examples=120, deadline=None)
    @given(MIXED)
    def test_round_trip_indexed(self, pinyin_spec, text):
        out = tokenize(pinyin_spec, text)
        assert decode(pinyin_spec, out) == normalize_text(text)

    @settings(max_examples=60, deadline=None)
    @given(MIXED)
    def test_round_trip_tiny_glyph_table(self, text):
        table = builtin_table(EncodingScheme("wubi"))
        spec = train_tokenizer(TRAIN_LINES[:5], table, TrainerConfig(vocab_size=120))
        out = tokenize(spec, text)
        assert decode(spec, out) == normalize_text(text)

    @settings(max_examples=60, deadline=None)
    @given(MIXED)
    def test_id_decode_matches_when_nothing_is_unk(self, pinyin_spec, text):
        out = tokenize(pinyin_spec, text)
        if UNK_ID not in out.ids:
            assert decode(pinyin_spec, out.ids) == decode(pinyin_spec, out)


class TestDecode:
    def test_empty_ids(self, pinyin_spec):
        assert decode(pinyin_spec, []) == ""

    def test_id_decode_drops_unk(self, pinyin_spec):
        out = tokenize(pinyin_spec, "Ω吃")
        assert decode(pinyin_spec, out) == "Ω吃"
        assert decode(pinyin_spec, out.ids) == "吃"

    @pytest.mark.parametrize("bad", [-1, 10**6])
    def test_out_of_range_id_raises(self, pinyin_spec, bad):
        with pytest.raises(ValueError):
            decode(pinyin_spec, [bad])

    def test_specials_are_dropped(self, pinyin_spec):
        ids = tokenize(pinyin_spec, "吃").ids
        assert decode(pinyin_spec, [2] + ids + [3, 0]) == "吃"

    def test_ambiguous_form_without_index_raises(self, noindex_spec):
        out = tokenize(noindex_spec, "吃")
        with pytest.raises(AmbiguousFormError):
            decode(noindex_spec, out)

    def test_trailing_fragment_gets_a_marker(self, pinyin_table):
        model = singles_model("chi14#")
        spec = TokenizerSpec(pinyin_table, model)
        assert decode(spec, [model.piece_ids["c"]]) == "⟨frag:c⟩"

    def test_unknown_complete_form_gets_a_marker(self, pinyin_table):
        model = uniform_model(["zzz#"])
        spec = TokenizerSpec(pinyin_table, model)
        assert decode(spec, [5]) == "⟨frag:zzz#⟩"

    def test_dangling_escape_gets_a_marker(self, pinyin_table):
        model = uniform_model([ESCAPE])
        spec = TokenizerSpec(pinyin_table, model)
        assert decode(spec, [5]) == f"⟨frag:{ESCAPE}⟩"


class TestTruncation:
    def make_spec(self, pinyin_table, max_len):
        model = singles_model("chi14#mei45#")
        return TokenizerSpec(pinyin_table, model, max_len=max_len)

    def test_backs_up_to_character_boundary(self, pinyin_table):
        spec = self.make_spec(pinyin_table, 8)
        out = tokenize(spec, "魑魅")
        assert len(out.tokens) == 6
        assert decode(spec, out) == "魑"
        assert out.char_to_tokens == [[0, 1, 2, 3, 4, 5], []]

    def test_exact_boundary_is_kept(self, pinyin_table):
        out = tokenize(self.make_spec(pinyin_table, 6), "魑魅")
        assert len(out.tokens) == 6

    def test_no_truncation_when_under_limit(self, pinyin_table):
        out = tokenize(self.make_spec(pinyin_table, 100), "魑魅")
        assert len(out.tokens) == 12

    def test_zero_keeps_nothing(self, pinyin_table):
        out = tokenize(self.make_spec(pinyin_table, 0), "魑魅")
        assert out.tokens == []


class TestHomophoneInvariance:
    def test_noindex_ids_survive_substitution(self, noindex_spec):
        a = tokenize(noindex_spec, "吃饭了吗")
        b = tokenize(noindex_spec, "嗤饭了吗")
        assert a.ids == b.ids and a.tokens == b.tokens

    def test_indexed_ids_distinguish_homophones(self, pinyin_spec):
        a = tokenize(pinyin_spec, "吃饭")
        b = tokenize(pinyin_spec, "嗤饭")
        assert a.ids != b.ids


@pytest.fixture(scope="module")
def worded(pinyin_table):
    lines = ["魑魅出没", "魑魅无形", "魑魅魍魉", "吃饭了吗"] * 3
    lex = build_lexicon(lines, MaxMatchSegmenter({"魑魅"}), vocab_size=120, word_ratio=0.1)
    return train_tokenizer(lines, pinyin_table, TrainerConfig(vocab_size=120), lexicon=lex)


class TestWordRouting:
    def test_word_emits_single_id(self, worded):
        out = tokenize(worded, "魑魅吃")
        assert out.tokens[0] == "chi14#mei45#"
        assert out.ids[0] == worded.lexicon.words["魑魅"] == 5
        assert out.offsets[0] == (0, 2)

    def test_word_piece_never_comes_from_segmentation(self, worded):
        stream = encode_text(worded.table, "魑魅")
        assert "chi14#mei45#" not in worded.model.segment(stream)

    def test_budget_arithmetic(self, worded):
        assert worded.model.vocab_size == 120

    def test_round_trip_through_words(self, worded):
        out = tokenize(worded, "魑魅魍魉吃")
        assert decode(worded, out) == "魑魅魍魉吃"
        assert decode(worded, out.ids) == "魑魅魍魉吃"


class TestBatch:
    def test_matches_single_calls(self, pinyin_spec):
        texts = ["魑魅", "", "吃了吗", "abc"]
        batch = tokenize_batch(pinyin_spec, texts)
        for text, got in zip(texts, batch):
            assert got == tokenize(pinyin_spec, text)


class TestSpecValidation:
    def test_rejects_unknown_normalization(self, pinyin_spec):
        with pytest.raises(ValueError):
            TokenizerSpec(pinyin_spec.table, pinyin_spec.model, normalization="nfkc")

    def test_rejects_negative_max_len(self, pinyin_spec):
        with pytest.raises(ValueError):
            TokenizerSpec(pinyin_spec.table, pinyin_spec.model, max_len=-1)

    def test_scheme_comes_from_the_table(self, pinyin_spec):
        assert pinyin_spec.scheme == pinyin_spec.table.scheme
        assert pinyin_spec.specials[0] == "[PAD]"


class TestBundle:
    @pytest.fixture()
    def bundle(self, tmp_path, pinyin_table):
        lines = ["魑魅出没", "魑魅无形", "吃饭了吗"] * 3
        lex = build_lexicon(lines, MaxMatchSegmenter({"魑魅"}), vocab_size=120, word_ratio=0.1)
        spec = train_tokenizer(
            lines, pinyin_table, TrainerConfig(vocab_size=120), lexicon=lex
        )
        spec = TokenizerSpec(spec.table, spec.model, lexicon=spec.lexicon, max_len=64)
        d = tmp_path / "bundle"
        save_bundle(spec, d, corpus_fp="cafe" * 16, extra={"note": "test"})
        return spec, d

    def test_round_trip_tokenizes_identically(self, bundle):
        spec, d = bundle
        loaded = load_bundle(d)
        for text in ["魑魅魍魉吃饭", "abc 123", ""]:
            assert tokenize(loaded, text) == tokenize(spec, text)
        assert loaded.max_len == 64
        assert loaded.lexicon.words == spec.lexicon.words

    def test_manifest_records_the_essentials(self, bundle):
        _, d = bundle
        manifest = json.loads((d / MANIFEST_FILE).read_text())
        assert manifest["scheme"] == "pinyin"
        assert manifest["use_index"] is True
        assert manifest["vocab_size"] == 120
        assert manifest["corpus_fingerprint"] == "cafe" * 16
        assert manifest["lexicon_size"] == 1
        assert manifest["note"] == "test"

    def test_tampered_mapping_is_rejected_with_both_fingerprints(self, bundle):
        _, d = bundle
        manifest = json.loads((d / MANIFEST_FILE).read_text())
        with open(d / MAPPING_FILE, "ab") as f:
            f.write(b"% tampered\n")
        with pytest.raises(BundleError) as err:
            load_bundle(d)
        assert manifest["mapping_fingerprint"] in str(err.value)

    def test_scheme_mismatch_is_rejected(self, bundle):
        _, d = bundle
        path = d / MANIFEST_FILE
        manifest = json.loads(path.read_text())
        manifest["use_index"] = False
        path.write_text(json.dumps(manifest))
        with pytest.raises(BundleError):
            load_bundle(d)

    def test_vocab_size_mismatch_is_rejected(self, bundle):
        _, d = bundle
        path = d / MANIFEST_FILE
        manifest = json.loads(path.read_text())
        manifest["vocab_size"] = 999
        path.write_text(json.dumps(manifest))
        with pytest.raises(BundleError):
            load_bundle(d)

    def test_missing_manifest_is_rejected(self, tmp_path):
        with pytest.raises(BundleError):
            load_bundle(tmp_path)

    def test_corrupt_manifest_is_rejected(self, tmp_path):
        (tmp_path / MANIFEST_FILE).write_text("{nope")
        with pytest.raises(BundleError):
            load_bundle(tmp_path)

    def test_byte_scheme_bundle_needs_no_mapping_file(self, tmp_path):
        table = builtin_table(EncodingScheme("byte"))
        spec = train_tokenizer(["魑魅", "吃饭"] * 3, table, TrainerConfig(vocab_size=60))
        d = tmp_path / "byte-bundle"
        save_bundle(spec, d)
        assert not (d / MAPPING_FILE).exists()
        loaded = load_bundle(d)
        assert tokenize(loaded, "魑魅吃").ids == tokenize(spec, "魑魅吃").ids
