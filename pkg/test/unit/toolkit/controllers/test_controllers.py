import unittest
from unittest.mock import patch

from baconshor.toolkit.contracts.bit_matrix import BitMatrix
from baconshor.toolkit.contracts.distance_result import DistanceResult
from baconshor.toolkit.contracts.empty_matrix_error import EmptyMatrixError
from baconshor.toolkit.contracts.gv_query import GVQuery
from baconshor.toolkit.contracts.property_violation_error import PropertyViolationError
from baconshor.toolkit.contracts.region import Region
from baconshor.toolkit.contracts.settings import Settings
from baconshor.toolkit.controllers.analyze import AnalyzeController
from baconshor.toolkit.controllers.bounds import BoundsController
from baconshor.toolkit.controllers.hadamard import HadamardController
from baconshor.toolkit.controllers.localize import LocalizeController
from baconshor.toolkit.controllers.regions import RegionsController
from baconshor.toolkit.controllers.search import SearchController
from baconshor.toolkit.controllers.verify import VerifyController, nonzero_matrices, parameter_shapes
from baconshor.toolkit.services.gbs import build

from ..fixtures import EXAMPLE, GAPPED_ROW


def settings() -> Settings:
    return Settings(enumeration_cap=2**20, threads=2)


class TestAnalyzeController(unittest.TestCase):
    def test_full_oracle(self):
        report = AnalyzeController(settings=settings()).execute(matrix=EXAMPLE, oracle="full")
        self.assertEqual(report.summary, "[6, 2, 2]")
        self.assertEqual(report.results["oracle"]["value"], 2)
        self.assertEqual(report.results["derived"], {"n": 6, "dim_s": 2, "k": 2, "g": 2})
        self.assertEqual(report.arguments["cap"], 2**20)
        self.assertTrue(report.passed)
        self.assertIn("oracle", report.timings)

    def test_bounded_oracle_below_distance(self):
        report = AnalyzeController(settings=settings()).execute(matrix=EXAMPLE, oracle="bounded", w_max=1)
        self.assertIsNone(report.results["oracle"]["value"])
        self.assertEqual(report.results["oracle"]["certified_lower_bound"], 1)

    def test_theory_only(self):
        report = AnalyzeController(settings=settings()).execute(matrix=GAPPED_ROW)
        self.assertNotIn("oracle", report.results)
        self.assertEqual(report.results["theoretical"]["d"], 1)
        self.assertTrue(report.results["bounds"]["product_passes"])

    def test_disagreement_is_a_violation(self):
        wrong = DistanceResult(mode="full", value=3, certified_lower_bound=2)
        with patch("baconshor.toolkit.controllers.analyze.distance_full", return_value=wrong):
            with self.assertRaises(PropertyViolationError):
                AnalyzeController(settings=settings()).execute(matrix=EXAMPLE, oracle="full")

    def test_empty_matrix(self):
        with self.assertRaises(EmptyMatrixError):
            AnalyzeController(settings=settings()).execute(matrix=BitMatrix.zeros(2, 2))


class TestLocalizeController(unittest.TestCase):
    def test_padded_worked_example(self):
        report, local = LocalizeController(settings=settings()).execute(matrix=EXAMPLE, pad=True)
        self.assertEqual(report.results["n_original"], 6)
        self.assertEqual(report.results["n_localized"], 8)
        self.assertEqual(report.results["n"], 18)
        self.assertEqual(report.results["padded"], 10)
        self.assertEqual((report.results["k"], report.results["rank"]), (2, 2))
        self.assertTrue(report.results["check_locality"])
        self.assertTrue(report.passed)
        self.assertEqual(local.code.n, 18)

    def test_without_padding(self):
        report, local = LocalizeController(settings=settings()).execute(matrix=GAPPED_ROW)
        self.assertEqual(report.results["n"], 3)
        self.assertEqual(report.results["row_ancillas"], 1)
        self.assertEqual(local.padded, 0)


class TestBoundsAndHadamardControllers(unittest.TestCase):
    def test_hadamard(self):
        report, matrix = HadamardController(settings=settings()).execute(k=3)
        self.assertEqual((report.results["size"], report.results["n"]), (7, 28))
        self.assertEqual(report.results["rows"], matrix.to_strings())

    def test_bounds_of_hadamard(self):
        _, matrix = HadamardController(settings=settings()).execute(k=3)
        report = BoundsController(settings=settings()).execute(matrix=matrix)
        self.assertTrue(report.passed)
        self.assertEqual(report.results["bounds"]["refined_slack"], 0)
        self.assertTrue(report.results["feasible"])
        self.assertEqual(report.results["profile"]["k"], 3)

    def test_bounds_of_worked_example(self):
        report = BoundsController(settings=settings()).execute(matrix=EXAMPLE)
        self.assertEqual(report.results["profile"]["M"], ["11", "01"])
        self.assertEqual(report.summary, "[6, 2, 2] passes=True feasible=True")


class TestSearchController(unittest.TestCase):
    def test_search_without_success(self):
        query = GVQuery(m=6, k=6, beta=0.3, max_trials=8, seed=2)
        report, matrix = SearchController(settings=settings()).execute(query=query)
        self.assertIsNone(matrix)
        self.assertFalse(report.results["found"])
        self.assertEqual(report.results["trials_used"], 8)
        self.assertEqual(report.arguments["seed"], 2)

    def test_survey(self):
        query = GVQuery(m=6, k=6, beta=0.3, max_trials=8, seed=2)
        report, matrix = SearchController(settings=settings()).execute(query=query, survey=True, threads=1)
        self.assertIsNone(matrix)
        self.assertEqual((report.results["trials"], report.results["successes"]), (8, 0))
        self.assertEqual(report.results["first_success"], -1)

    def test_search_with_success(self):
        query = GVQuery(m=16, k=4, beta=0.25, max_trials=200, seed=0)
        report, matrix = SearchController(settings=settings()).execute(query=query)
        self.assertTrue(report.results["found"])
        self.assertEqual(report.results["matrix"], matrix.to_strings())


class TestRegionsController(unittest.TestCase):
    def test_worked_example(self):
        code = build(EXAMPLE).code
        report = RegionsController(settings=settings()).execute(code=code, region=Region.of(6, [0, 1]))
        self.assertTrue(report.results["cleaning"])
        self.assertEqual(report.results["interaction_range"], 2)
        self.assertEqual(report.results["restriction"]["k_restricted"], 0)
        self.assertEqual(report.results["l_bare"] + report.results["l_complement"], 4)
        self.assertTrue(report.passed)

    def test_interaction_override(self):
        code = build(EXAMPLE).code
        report = RegionsController(settings=settings()).execute(code=code, region=Region.of(6, [0]), interaction=1)
        self.assertEqual(report.results["boundary"], [1, 2])


class TestVerifyController(unittest.TestCase):
    def test_shapes(self):
        self.assertEqual(parameter_shapes(1), [(1, 1), (1, 2), (2, 2)])
        self.assertEqual(len(list(nonzero_matrices(2, 2))), 15)

    def test_parameters(self):
        report = VerifyController(settings=settings()).execute(scope="parameters", size=2)
        self.assertEqual(report.results["instances"], 22 + 7 + 63)
        self.assertEqual(report.results["failures"], 0)
        self.assertTrue(report.passed)

    def test_cleaning(self):
        report = VerifyController(settings=settings()).execute(scope="cleaning", trials=30, max_qubits=4, seed=3)
        self.assertEqual(report.results["instances"], 30)
        self.assertTrue(report.passed)

    def test_cleaning_of_a_code(self):
        code = build(EXAMPLE).code
        report = VerifyController(settings=settings()).execute(scope="cleaning", code=code)
        self.assertEqual(report.results["instances"], 64)
        self.assertTrue(report.passed)

    def test_ancilla(self):
        report = VerifyController(settings=settings()).execute(scope="ancilla", trials=5, max_qubits=3, seed=1)
        self.assertGreater(report.results["instances"], 0)
        self.assertTrue(report.passed)

    def test_restriction(self):
        report = VerifyController(settings=settings()).execute(scope="restriction", trials=5, seed=4)
        self.assertEqual(report.results["instances"], 5)
        self.assertTrue(report.passed)


if __name__ == "__main__":
    unittest.main()
