import unittest
from itertools import chain, combinations
from itertools import product as cartesian

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from baconshor.toolkit.contracts.cap_exceeded_error import CapExceededError
from baconshor.toolkit.contracts.group_basis import GroupBasis
from baconshor.toolkit.contracts.missing_layout_error import MissingLayoutError
from baconshor.toolkit.contracts.parse_error import ParseError
from baconshor.toolkit.contracts.region import Region
from baconshor.toolkit.services.gbs import build
from baconshor.toolkit.services.localize import localize, pad_to
from baconshor.toolkit.services.pauli import commutes_bits, contains, is_subgroup
from baconshor.toolkit.services.regions import (
    boundary,
    cleaning_check,
    code_distance,
    complement_witness,
    compress,
    interaction_range,
    l,
    l_bare,
    parse_region,
    random_local_code,
    restrict_group,
    restriction_check,
    stabilizer_cleaning_check,
    supported_subgroup,
)
from baconshor.toolkit.services.subsystem import derive, distance_full, random_gauge_group

from ..fixtures import EXAMPLE, all_ones, paulis


def subsets(n: int):
    return chain.from_iterable(combinations(range(n), size) for size in range(n + 1))


def span(vectors: list[int]) -> list[int]:
    elements = [0]
    for vector in vectors:
        elements += [element ^ vector for element in elements]
    return elements


def symplectic_mask(n: int, region: Region) -> int:
    mask = sum(1 << qubit for qubit in region.members)
    return mask | (mask << n)


def region_operators(n: int, region: Region):
    members = region.ordered()
    for letters in cartesian(range(4), repeat=len(members)):
        vector = 0
        for qubit, letter in zip(members, letters):
            vector |= (letter & 1) << qubit
            vector |= (letter >> 1) << (n + qubit)
        yield vector


def supported_elements(group: GroupBasis, region: Region) -> set[int]:
    outside = symplectic_mask(group.n, region.complement())
    return {element for element in span(group.vectors()) if element & outside == 0}


def count_by_definition(region: Region, centralized: GroupBasis, supported: GroupBasis) -> int:
    """log2 |C(centralized) ∩ P(M)| - log2 |supported(M)| by enumerating both sets."""

    n = centralized.n
    inside = sum(
        1
        for vector in region_operators(n, region)
        if all(commutes_bits(n, vector, generator) for generator in centralized.vectors())
    )
    return inside.bit_length() - len(supported_elements(supported, region)).bit_length()


class TestRestriction(unittest.TestCase):
    def test_restricted_and_supported(self):
        code = build(EXAMPLE).code
        region = Region.of(6, [0, 1])
        restricted = restrict_group(code.gauge, region)
        self.assertEqual(restricted.dim, 3)
        for text in ("X0 X1", "Z0", "Z1"):
            self.assertTrue(contains(restricted, paulis(6, text)[0]))
        supported = supported_subgroup(code.gauge, region)
        self.assertEqual(supported.dim, 1)
        self.assertTrue(contains(supported, paulis(6, "X0 X1")[0]))

    @given(st.integers(1, 4), st.integers(0, 2**32 - 1), st.data())
    @settings(max_examples=80, deadline=None)
    def test_groups_match_their_definitions(self, n, seed, data):
        code = derive(n, random_gauge_group(n, np.random.default_rng(seed)))
        region = Region.of(n, data.draw(st.sets(st.integers(0, n - 1))))
        keep = symplectic_mask(n, region)
        elements = span(code.gauge.vectors())

        restricted = restrict_group(code.gauge, region)
        self.assertEqual(set(span(restricted.vectors())), {element & keep for element in elements})
        supported = supported_subgroup(code.gauge, region)
        self.assertEqual(set(span(supported.vectors())), supported_elements(code.gauge, region))
        self.assertTrue(is_subgroup(supported, restricted))

        self.assertEqual(l(code, region), count_by_definition(region, code.stabilizer, code.gauge))
        self.assertEqual(l_bare(code, region), count_by_definition(region, code.gauge, code.stabilizer))

    def test_whole_and_empty_regions(self):
        code = build(EXAMPLE).code
        everything = Region.everything(6)
        self.assertEqual(l(code, everything), 2 * code.k)
        self.assertEqual(l_bare(code, everything), 2 * code.k)
        self.assertEqual(l(code, Region(n=6)), 0)
        self.assertEqual(l_bare(code, Region(n=6)), 0)

    def test_compress(self):
        code = build(EXAMPLE).code
        compressed = compress(code, Region.of(6, [0, 1, 4]))
        self.assertEqual(compressed.n, 3)
        self.assertTrue(contains(compressed.gauge, paulis(3, "Z0 Z2")[0]))
        self.assertTrue(contains(compressed.gauge, paulis(3, "X0 X1")[0]))


class TestCleaning(unittest.TestCase):
    def test_every_subset_of_worked_example(self):
        code = build(EXAMPLE).code
        for members in subsets(6):
            with self.subTest(region=members):
                self.assertTrue(cleaning_check(code, Region.of(6, members)))

    def test_definition_matches_formula(self):
        rng = np.random.default_rng(11)
        for n in range(1, 5):
            for _ in range(5):
                code = derive(n, random_gauge_group(n, rng))
                for members in subsets(n):
                    region = Region.of(n, members)
                    with self.subTest(n=n, region=members):
                        self.assertEqual(l(code, region), count_by_definition(region, code.stabilizer, code.gauge))
                        self.assertEqual(l_bare(code, region), count_by_definition(region, code.gauge, code.stabilizer))

    @given(st.integers(1, 5), st.integers(0, 2**32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_cleaning_identity(self, n, seed):
        rng = np.random.default_rng(seed)
        code = derive(n, random_gauge_group(n, rng))
        region = Region.of(n, [qubit for qubit in range(n) if rng.random() < 0.5])
        self.assertTrue(cleaning_check(code, region))

    def test_stabilizer_codes(self):
        code = derive(3, paulis(3, "Z0 Z1", "Z1 Z2"))
        for members in subsets(3):
            self.assertTrue(stabilizer_cleaning_check(code, Region.of(3, members)))

    def test_complement_witness(self):
        code = build(EXAMPLE).code
        region = Region.of(6, [0])
        witness = complement_witness(code.gauge, region)
        self.assertIsNotNone(witness)
        self.assertNotIn(0, witness.support())
        self.assertTrue(contains(code.gauge, witness))
        self.assertIsNone(complement_witness(code.gauge, Region.everything(6)))


class TestGeometry(unittest.TestCase):
    def test_boundary(self):
        code = build(EXAMPLE).code
        self.assertEqual(boundary(code.layout, Region.of(6, [0]), 1).ordered(), [1, 2])
        self.assertEqual(boundary(code.layout, Region.of(6, [0]), 2).ordered(), [1, 2, 3, 4, 5])
        with self.assertRaises(MissingLayoutError):
            boundary(None, Region.of(6, [0]), 1)

    def test_interaction_range(self):
        gbs = build(EXAMPLE)
        self.assertEqual(interaction_range(gbs.code), 2)
        self.assertEqual(interaction_range(localize(gbs).code), 1)
        with self.assertRaises(MissingLayoutError):
            interaction_range(derive(2, paulis(2, "Z0 Z1")))

    def test_restriction_of_bacon_shor(self):
        code = localize(build(all_ones(3))).code
        region = parse_region("0:2,0:3", code)
        report = restriction_check(code, region)
        self.assertEqual((report.region_size, report.boundary_size, report.interaction_range), (6, 3, 1))
        self.assertEqual(report.d, 3)
        self.assertTrue(report.conclusive)
        self.assertTrue(report.holds)
        self.assertTrue(report.k_restricted == 0 or report.d_restricted >= report.d - report.boundary_size)

    def test_restriction_inconclusive_under_cap(self):
        code = localize(build(all_ones(3))).code
        report = restriction_check(code, parse_region("0:3,0:3", code), distance=3, cap=2**4)
        self.assertFalse(report.conclusive)
        self.assertTrue(report.holds)

    def test_distance_falls_back_to_weight_search(self):
        code = pad_to(localize(build(EXAMPLE)), 18).code
        with self.assertRaises(CapExceededError):
            distance_full(code, cap=2**20)
        self.assertEqual(code_distance(code, cap=2**20), 2)

        report = restriction_check(code, parse_region("0:3,0:1", code), cap=2**20)
        self.assertEqual(report.d, 2)
        self.assertTrue(report.conclusive)
        self.assertTrue(report.holds)

    def test_distance_over_cap(self):
        code = localize(build(all_ones(3))).code
        self.assertEqual(code_distance(code), 3)
        with self.assertRaises(CapExceededError):
            code_distance(code, cap=2**4)

    def test_restriction_needs_layout(self):
        with self.assertRaises(MissingLayoutError):
            restriction_check(derive(2, paulis(2, "Z0 Z1")), Region.of(2, [0]))

    def test_random_local_codes(self):
        for seed in range(20):
            code = random_local_code(2, 3, np.random.default_rng(seed))
            self.assertLessEqual(interaction_range(code), 1)
            if code.k == 0:
                continue
            region = Region.of(code.n, range(0, code.n, 2))
            self.assertTrue(restriction_check(code, region).holds)


class TestParseRegion(unittest.TestCase):
    def test_indices(self):
        code = build(EXAMPLE).code
        self.assertEqual(parse_region("0,3", code).ordered(), [0, 3])
        self.assertEqual(parse_region(" ", code), Region(n=6))

    def test_rectangle(self):
        code = build(EXAMPLE).code
        self.assertEqual(parse_region("0:1,0:3", code).ordered(), [0, 1])
        self.assertEqual(parse_region("1:3,1:3", code).ordered(), [2, 3, 5])

    def test_errors(self):
        code = build(EXAMPLE).code
        for text in ("a,b", "0,9"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_region(text, code)
        with self.assertRaises(MissingLayoutError):
            parse_region("0:1,0:1", derive(2, paulis(2, "Z0 Z1")))


if __name__ == "__main__":
    unittest.main()
