import unittest

from pydantic import ValidationError

from baconshor.toolkit.contracts.gv_query import GVQuery
from baconshor.toolkit.contracts.out_of_range_error import OutOfRangeError
from baconshor.toolkit.services.gf2core import column_basis, min_weight_nonzero, rank, row_basis
from baconshor.toolkit.services.search import (
    RNG_ALGORITHM,
    binary_entropy,
    gv_feasible,
    gv_search,
    gv_survey,
    sample_fixed_rank,
    target_distance,
    trial_rng,
)


class TestEntropy(unittest.TestCase):
    def test_values(self):
        self.assertEqual(binary_entropy(0.0), 0.0)
        self.assertEqual(binary_entropy(1.0), 0.0)
        self.assertAlmostEqual(binary_entropy(0.5), 1.0)
        self.assertAlmostEqual(binary_entropy(0.25), 0.8112781244591328)
        self.assertAlmostEqual(binary_entropy(0.1), binary_entropy(0.9))

    def test_out_of_range(self):
        for probability in (-0.1, 1.1):
            with self.assertRaises(OutOfRangeError):
                binary_entropy(probability)

    def test_feasibility(self):
        self.assertTrue(gv_feasible(0.25, 0.1))
        self.assertTrue(gv_feasible(0.1, 0.25))
        self.assertFalse(gv_feasible(0.6, 0.25))
        for alpha, beta in ((0.0, 0.1), (0.2, 0.0), (0.2, 0.5)):
            with self.subTest(alpha=alpha, beta=beta):
                with self.assertRaises(OutOfRangeError):
                    gv_feasible(alpha, beta)


class TestSampling(unittest.TestCase):
    def test_requested_rank(self):
        rng = trial_rng(3, 0)
        for k in range(1, 7):
            for _ in range(5):
                matrix = sample_fixed_rank(6, k, rng)
                self.assertEqual((matrix.n_rows, matrix.n_cols), (6, 6))
                self.assertEqual(rank(matrix), k)

    def test_rank_out_of_range(self):
        for k in (0, 5):
            with self.assertRaises(OutOfRangeError):
                sample_fixed_rank(4, k, trial_rng(0, 0))

    def test_trial_streams_are_reproducible(self):
        self.assertEqual(sample_fixed_rank(8, 3, trial_rng(9, 4)), sample_fixed_rank(8, 3, trial_rng(9, 4)))
        self.assertEqual(
            trial_rng(1, 2).integers(0, 2**32, size=4).tolist(), trial_rng(1, 2).integers(0, 2**32, size=4).tolist()
        )
        self.assertNotEqual(
            trial_rng(1, 2).integers(0, 2**32, size=4).tolist(), trial_rng(1, 3).integers(0, 2**32, size=4).tolist()
        )


class TestSearch(unittest.TestCase):
    def test_query_validation(self):
        for fields in (
            {"m": 4, "k": 0, "beta": 0.25},
            {"m": 4, "k": 5, "beta": 0.25},
            {"m": 4, "k": 2, "beta": 0.5},
            {"m": 4, "k": 2, "beta": 0.25, "max_trials": 0},
            {"m": 4, "k": 2, "beta": 0.25, "seed": -1},
        ):
            with self.subTest(fields=fields):
                with self.assertRaises(ValidationError):
                    GVQuery(**fields)

    def test_target(self):
        self.assertEqual(target_distance(GVQuery(m=16, k=4, beta=0.25)), 4)
        self.assertEqual(target_distance(GVQuery(m=10, k=2, beta=0.21)), 3)

    def test_finds_matrix(self):
        result = gv_search(GVQuery(m=16, k=4, beta=0.25, max_trials=1000, seed=0))
        self.assertTrue(result.found)
        self.assertEqual(rank(result.matrix), 4)
        self.assertGreaterEqual(result.d_row, 4)
        self.assertGreaterEqual(result.d_col, 4)
        self.assertEqual(min_weight_nonzero(row_basis(result.matrix))[0], result.d_row)
        self.assertEqual(min_weight_nonzero(column_basis(result.matrix))[0], result.d_col)
        self.assertEqual(result.rng_algorithm, RNG_ALGORITHM)

    def test_thread_count_does_not_change_result(self):
        query = GVQuery(m=12, k=3, beta=0.3, max_trials=40, seed=5)
        self.assertEqual(gv_search(query, threads=1), gv_search(query, threads=4))

    def test_full_rank_never_qualifies(self):
        result = gv_search(GVQuery(m=8, k=8, beta=0.25, max_trials=20, seed=1), threads=2)
        self.assertFalse(result.found)
        self.assertEqual(result.trials_used, 20)
        self.assertIsNone(result.matrix)

    def test_survey(self):
        query = GVQuery(m=16, k=4, beta=0.25, max_trials=12, seed=0)
        survey = gv_survey(query, threads=3)
        self.assertEqual(survey.trials, 12)
        self.assertAlmostEqual(survey.rate, survey.successes / 12)
        found = gv_search(query)
        if found.found:
            self.assertEqual(survey.first_success, found.trials_used - 1)
        else:
            self.assertEqual(survey.first_success, -1)
        self.assertEqual(gv_survey(query, threads=1), survey)


if __name__ == "__main__":
    unittest.main()
