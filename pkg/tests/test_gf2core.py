import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config.settings import GENUS1_GOLDEN, EnumerationSettings
from services.exceptions import BudgetExceededError, PreconditionError, StructuralError
from services.gf2core import (
    BinaryCode,
    BitWord,
    alternating_word,
    build_d,
    build_d_plus,
    build_e7,
    build_e8,
    build_golay,
    codeword_array,
    codewords,
    direct_sum,
    direct_sum_all,
    dual_code,
    is_doubly_even,
    is_self_dual,
    is_self_orthogonal,
    pattern_counts,
    rref,
    weight,
    weight_distribution,
)
from tests.conftest import small_codes


class TestBitWord:
    def test_string_form_puts_coordinate_one_in_low_bit(self):
        word = BitWord.from_string("1100")
        assert word.bits == 0b0011
        assert str(word) == "1100"
        assert word[0] == 1 and word[3] == 0

    def test_index_out_of_range(self):
        with pytest.raises(StructuralError):
            BitWord.from_string("101")[3]

    def test_xor_needs_equal_lengths(self):
        with pytest.raises(StructuralError):
            BitWord.from_string("10") ^ BitWord.from_string("100")

    def test_weight_and_dot(self):
        u, v = BitWord.from_string("1110"), BitWord.from_string("0111")
        assert u.weight == 3
        assert u.dot(v) == 0
        assert (u ^ v).weight == 2

    def test_rejects_non_binary_text(self):
        with pytest.raises(StructuralError):
            BitWord.from_string("1021")

    def test_concat(self):
        assert str(BitWord.from_string("10").concat(BitWord.from_string("011"))) == "10011"


class TestRref:
    def test_dependent_row_dropped(self):
        rows = [BitWord.from_string(s) for s in ("1100", "0110", "1010")]
        basis, rank = rref(rows)
        assert rank == 2
        assert [str(b) for b in basis] == ["1010", "0110"]

    def test_mixed_lengths(self):
        with pytest.raises(StructuralError):
            rref([BitWord.from_string("10"), BitWord.from_string("101")])

    @given(small_codes())
    def test_idempotent(self, code):
        again = BinaryCode(code.n, code.generators)
        assert again.generators == code.generators

    @given(small_codes())
    def test_same_row_space_same_key(self, code):
        shuffled = BinaryCode(code.n, tuple(reversed(code.generators)) + (0,))
        assert shuffled.key == code.key


class TestDual:
    @given(small_codes())
    def test_involution(self, code):
        assert dual_code(dual_code(code)) == code

    @given(small_codes())
    def test_dimensions_add_up(self, code):
        assert code.k + dual_code(code).k == code.n

    @given(small_codes())
    def test_dual_is_orthogonal(self, code):
        dual = dual_code(code)
        assert all((g & h).bit_count() % 2 == 0 for g in code.generators for h in dual.generators)

    def test_d4_dual_is_even_weight_code(self):
        dual = dual_code(build_d(4))
        assert dual.k == 3
        assert set(weight_distribution(dual)) == {0, 2, 4}


class TestSelfDuality:
    @pytest.mark.parametrize("code", [build_e8(), build_golay(), build_d_plus(16), build_d_plus(24)])
    def test_type_ii(self, code):
        assert is_self_dual(code)
        assert is_doubly_even(code)

    def test_d_n_is_self_orthogonal_not_self_dual(self):
        code = build_d(12)
        assert is_self_orthogonal(code)
        assert is_doubly_even(code)
        assert not is_self_dual(code)

    def test_singly_even(self):
        code = BinaryCode.from_strings(["1100", "0011"])
        assert is_self_dual(code)
        assert not is_doubly_even(code)


class TestCodewords:
    def test_gray_order(self):
        code = build_e8()
        words = [w.bits for w in codewords(code)]
        assert len(words) == 16
        assert words[0] == 0
        assert len(set(words)) == 16
        for a, b in zip(words, words[1:]):
            assert a ^ b in code.generators

    @settings(max_examples=40)
    @given(small_codes())
    def test_count_is_two_to_the_k(self, code):
        words = list(codewords(code))
        assert len(words) == 2 ** code.k
        assert len({w.bits for w in words}) == 2 ** code.k

    def test_array_matches_iterator(self):
        code = build_e7()
        assert codeword_array(code).tolist() == [w.bits for w in codewords(code)]

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError) as excinfo:
            list(codewords(build_e8(), EnumerationSettings(max_message_bits=3)))
        assert excinfo.value.limit == 3

    @pytest.mark.parametrize("name,code", [
        ("d4", build_d(4)), ("d6", build_d(6)), ("e7", build_e7()), ("d8", build_d(8)),
        ("e8", build_e8()), ("d10", build_d(10)), ("d12", build_d(12)), ("d16", build_d(16)),
        ("d24", build_d(24)), ("C5", build_d_plus(24)), ("C7", build_golay()),
    ])
    def test_weight_distributions(self, name, code):
        assert weight_distribution(code) == GENUS1_GOLDEN[name]


class TestBuilders:
    @pytest.mark.parametrize("n", [3, 5, 2])
    def test_d_n_needs_even_n_at_least_4(self, n):
        with pytest.raises(PreconditionError):
            build_d(n)

    def test_d_plus_needs_multiple_of_8(self):
        with pytest.raises(PreconditionError):
            build_d_plus(12)

    def test_alternating_word(self):
        assert str(BitWord(alternating_word(6), 6)) == "101010"

    def test_dimensions(self):
        assert build_d(24).k == 11
        assert build_e7().k == 3
        assert build_golay().k == 12

    def test_direct_sum(self):
        code = direct_sum(build_e8(), build_e8())
        assert (code.n, code.k) == (16, 8)
        assert is_self_dual(code)
        assert direct_sum_all([build_e8()] * 3).k == 12

    @settings(max_examples=40)
    @given(small_codes(), small_codes(), st.data())
    def test_direct_sum_weights_add(self, first, second, data):
        u = data.draw(st.sampled_from(list(codewords(first))))
        v = data.draw(st.sampled_from(list(codewords(second))))
        joined = u.concat(v)
        assert direct_sum(first, second).contains(joined)
        assert weight(joined) == weight(u) + weight(v)

    def test_rows_as_strings(self):
        golay = build_golay()
        rows = golay.to_strings()
        assert len(rows) == 12 and all(len(r) == 24 for r in rows)
        assert BinaryCode.from_strings(rows) == golay

    def test_direct_sum_too_long(self):
        with pytest.raises(StructuralError):
            direct_sum_all([build_golay()] * 3)


class TestPatternCounts:
    def test_first_word_is_low_bit(self):
        u, v = BitWord.from_string("1110"), BitWord.from_string("1000")
        assert pattern_counts(u, v) == [1, 2, 0, 1]

    def test_all_patterns(self):
        u, v = BitWord.from_string("1100"), BitWord.from_string("1010")
        assert pattern_counts(u, v) == [1, 1, 1, 1]

    @settings(max_examples=50)
    @given(st.lists(st.integers(min_value=0, max_value=(1 << 10) - 1), min_size=1, max_size=3))
    def test_counts_sum_to_length(self, bits):
        words = [BitWord(b, 10) for b in bits]
        counts = pattern_counts(*words)
        assert sum(counts) == 10
        assert len(counts) == 1 << len(words)
