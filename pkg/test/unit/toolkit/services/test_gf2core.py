import unittest
from functools import reduce as fold
from itertools import combinations
from operator import xor

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from baconshor.toolkit.contracts.bit_matrix import BitMatrix
from baconshor.toolkit.contracts.bit_vector import BitVector
from baconshor.toolkit.contracts.cap_exceeded_error import CapExceededError
from baconshor.toolkit.contracts.empty_code_error import EmptyCodeError
from baconshor.toolkit.contracts.parse_error import ParseError
from baconshor.toolkit.contracts.singular_matrix_error import SingularMatrixError
from baconshor.toolkit.services.gf2core import (
    Echelon,
    from_array,
    independent_rows,
    inverse,
    iter_span_blocks,
    kernel,
    membership,
    min_weight_nonzero,
    multiply,
    pack,
    parse_matrix,
    rank,
    reduce,
    render_matrix,
    to_array,
    transpose,
    unpack,
)


def matrices(max_rows: int = 5, max_cols: int = 5) -> st.SearchStrategy:
    return st.integers(1, max_rows).flatmap(
        lambda rows: st.integers(1, max_cols).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(0, 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows
            )
        )
    )


def xor_all(values) -> int:
    return fold(xor, values, 0)


class TestRankAndKernel(unittest.TestCase):
    def test_rank_examples(self):
        self.assertEqual(rank(BitMatrix.identity(3)), 3)
        self.assertEqual(rank(BitMatrix.ones(3, 3)), 1)
        self.assertEqual(rank(BitMatrix.zeros(3, 3)), 0)
        self.assertEqual(rank(BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])), 2)

    def test_kernel_of_parity_checks(self):
        basis = kernel(BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]]))
        self.assertEqual([vector.to_string() for vector in basis], ["111"])

    def test_kernel_of_identity_is_empty(self):
        self.assertEqual(kernel(BitMatrix.identity(4)), [])

    @given(matrices())
    @settings(max_examples=200, deadline=None)
    def test_rank_nullity(self, rows):
        matrix = BitMatrix.from_rows(rows)
        basis = kernel(matrix)
        self.assertEqual(rank(matrix) + len(basis), matrix.n_cols)
        self.assertEqual(rank(matrix), rank(transpose(matrix)))
        for vector in basis:
            for row in matrix.data:
                self.assertEqual(bin(row & vector.bits).count("1") % 2, 0)


class TestMembership(unittest.TestCase):
    def test_coefficients(self):
        basis = [BitVector.from_string("110"), BitVector.from_string("011")]
        self.assertEqual(membership(basis, BitVector.from_string("101")), (1, 1))
        self.assertEqual(membership(basis, BitVector.from_string("011")), (0, 1))
        self.assertEqual(membership(basis, BitVector.from_string("000")), (0, 0))

    def test_outside_span(self):
        basis = [BitVector.from_string("110"), BitVector.from_string("011")]
        self.assertIsNone(membership(basis, BitVector.from_string("100")))

    def test_reduce_is_canonical(self):
        first = reduce([BitVector.from_string("110"), BitVector.from_string("011")])
        second = reduce([BitVector.from_string("101"), BitVector.from_string("110"), BitVector.from_string("011")])
        self.assertEqual(first, second)

    def test_echelon_reports_dependency(self):
        echelon = Echelon()
        self.assertIsNone(echelon.insert(0b011))
        self.assertIsNone(echelon.insert(0b110))
        self.assertEqual(echelon.insert(0b101), 0b111)
        self.assertEqual(echelon.rank, 2)


class TestMatrixOperations(unittest.TestCase):
    def test_inverse(self):
        matrix = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        self.assertEqual(multiply(matrix, inverse(matrix)), BitMatrix.identity(3))

    def test_inverse_of_singular_matrix(self):
        with self.assertRaises(SingularMatrixError):
            inverse(BitMatrix.ones(2, 2))
        with self.assertRaises(SingularMatrixError):
            inverse(BitMatrix.ones(2, 3))

    def test_transpose(self):
        matrix = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        self.assertEqual(transpose(matrix).to_rows(), [[1, 0], [0, 1], [1, 1]])

    def test_independent_rows_are_greedy(self):
        matrix = BitMatrix.from_rows([[1, 1], [1, 1], [0, 1], [1, 0]])
        self.assertEqual(independent_rows(matrix), [0, 2])

    def test_numpy_conversion(self):
        array = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
        matrix = from_array(array)
        self.assertEqual(matrix.to_strings(), ["101", "011"])
        self.assertTrue(np.array_equal(to_array(matrix), array))
        self.assertEqual(from_array(np.zeros((0, 4), dtype=np.uint8)), BitMatrix.zeros(0, 4))


class TestEnumeration(unittest.TestCase):
    def test_span_blocks_cover_the_span_once(self):
        generators = np.stack([pack(1 << index, 1) for index in range(5)])
        values = [unpack(row) for block in iter_span_blocks(generators, low_bits=2) for row in block]
        self.assertEqual(len(values), 32)
        self.assertEqual(sorted(values), list(range(32)))

    def test_pack_spans_words(self):
        value = (1 << 70) | 5
        self.assertEqual(unpack(pack(value, 2)), value)

    def test_repetition_code(self):
        weight, witness = min_weight_nonzero([BitVector.from_string("11111")])
        self.assertEqual(weight, 5)
        self.assertEqual(witness.to_string(), "11111")

    def test_hamming_code(self):
        basis = [
            BitVector.from_string(row) for row in ("1000110", "0100101", "0010011", "0001111")
        ]
        weight, witness = min_weight_nonzero(basis)
        self.assertEqual(weight, 3)
        self.assertEqual(witness.weight, 3)

    def test_gray_code_blocks(self):
        # 14 generators: two high generators walked by Gray code over a 2^12 table
        basis = [BitVector(length=15, bits=(1 << index) | (1 << (index + 1))) for index in range(14)]
        weight, _ = min_weight_nonzero(basis)
        self.assertEqual(weight, 2)

    def test_minimum_only_in_high_block(self):
        basis = [BitVector.from_indices(41, range(3 * index, 3 * index + 3)) for index in range(12)]
        basis.append(BitVector.from_indices(41, [0, 1, 2, 40]))
        weight, witness = min_weight_nonzero(basis)
        self.assertEqual(weight, 1)
        self.assertEqual(witness.support(), [40])

    def test_stop_below_returns_early(self):
        basis = [BitVector.from_string("1100"), BitVector.from_string("0011")]
        weight, _ = min_weight_nonzero(basis, stop_below=3)
        self.assertLess(weight, 3)

    def test_empty_basis(self):
        with self.assertRaises(EmptyCodeError):
            min_weight_nonzero([])

    def test_cap(self):
        basis = [BitVector(length=5, bits=1 << index) for index in range(5)]
        with self.assertRaises(CapExceededError):
            min_weight_nonzero(basis, cap=16)

    @given(st.lists(st.integers(1, (1 << 9) - 1), min_size=1, max_size=6))
    @settings(max_examples=200, deadline=None)
    def test_matches_direct_enumeration(self, vectors):
        basis = reduce([BitVector(length=9, bits=bits) for bits in vectors])
        expected = min(
            bin(xor_all(chosen)).count("1")
            for size in range(1, len(basis) + 1)
            for chosen in combinations([vector.bits for vector in basis], size)
        )
        weight, witness = min_weight_nonzero(basis)
        self.assertEqual(weight, expected)
        self.assertIsNotNone(membership(basis, witness))


class TestMatrixFormat(unittest.TestCase):
    def test_parse_with_comments(self):
        matrix = parse_matrix("# example\n110\n\n011\n101\n")
        self.assertEqual(matrix.to_rows(), [[1, 1, 0], [0, 1, 1], [1, 0, 1]])

    def test_render_then_parse(self):
        matrix = BitMatrix.from_rows([[1, 0, 1, 1], [0, 0, 1, 0]])
        self.assertEqual(parse_matrix(render_matrix(matrix, comment="two rows")), matrix)

    def test_ragged_rows(self):
        with self.assertRaises(ParseError):
            parse_matrix("110\n01\n")

    def test_foreign_characters(self):
        with self.assertRaises(ParseError):
            parse_matrix("1a0\n")

    def test_entries_must_be_binary(self):
        for rows in ([[2, 0], [0, 5]], [[1, -1]], [[1, 0], [1]]):
            with self.subTest(rows=rows):
                with self.assertRaises(ValueError):
                    BitMatrix.from_rows(rows)
        self.assertEqual(BitMatrix.from_rows([[True, False]]).data, (1,))

    def test_no_rows(self):
        with self.assertRaises(ParseError):
            parse_matrix("# nothing here\n\n")


if __name__ == "__main__":
    unittest.main()
