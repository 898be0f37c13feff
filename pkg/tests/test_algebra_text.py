# pylint: disable=missing-docstring

import pathlib
import tempfile
import unittest

from giralebench.algebra import semilattice_error
from giralebench.algebra_text import dump_algebra, load_algebra, parse_algebra

import tests.common


class TestParse(unittest.TestCase):
    def test_g2_fixture_equals_the_generated(self) -> None:
        self.assertEqual(
            tests.common.g2(), tests.common.load_fixture_algebra("g2")
        )

    def test_g1_fixture_equals_the_generated(self) -> None:
        self.assertEqual(
            tests.common.g1(), tests.common.load_fixture_algebra("g1")
        )

    def test_comments_and_blank_lines(self) -> None:
        algebra, error = parse_algebra(
            "# a comment\n\nalgebra two  # trailing\nsize 2\nelements b t\n"
            "table meet\nb b\nb t\n"
        )
        self.assertIsNone(error)
        assert algebra is not None
        self.assertEqual("two", algebra.name)
        self.assertEqual(("meet",), algebra.signature())

    def test_malformed_meet_is_left_to_the_checks(self) -> None:
        algebra, error = parse_algebra(
            "algebra swapped\nsize 2\nelements b t\ntable meet\nt b\nb b\n"
        )
        self.assertIsNone(error)
        assert algebra is not None and algebra.meet is not None

        malformed = semilattice_error(algebra.meet)
        assert malformed is not None
        self.assertEqual("NOT-A-SEMILATTICE", malformed.code)
        self.assertEqual((0,), malformed.witness)

    def test_unknown_key(self) -> None:
        text = "algebra x\nsize 2\nbogus\n"
        algebra, error = parse_algebra(text)
        self.assertIsNone(algebra)
        assert error is not None
        self.assertEqual("SYNTAX-ERROR", error.code)
        self.assertEqual(text.index("bogus"), error.offset)

    def test_unknown_element(self) -> None:
        path = tests.common.TEST_DATA_DIR / "algebras" / "broken_syntax.alg"
        text = path.read_text(encoding="utf-8")
        _, error = parse_algebra(text)
        assert error is not None
        self.assertEqual("SYNTAX-ERROR", error.code)
        self.assertIn("lost", error.message)
        self.assertEqual(text.index("bot lost"), error.offset)

    def test_wrong_number_of_labels(self) -> None:
        _, error = parse_algebra("algebra x\nsize 3\nelements a b\n")
        assert error is not None
        self.assertIn("Expected 3 element labels", error.message)

    def test_missing_name(self) -> None:
        _, error = parse_algebra("size 1\nelements e\n")
        assert error is not None
        self.assertEqual(0, error.offset)

    def test_duplicate_constant(self) -> None:
        _, error = parse_algebra(
            "algebra x\nsize 1\nelements e\nconst one = e\nconst one = e\n"
        )
        assert error is not None
        self.assertIn("Duplicate constant", error.message)


class TestDump(unittest.TestCase):
    def test_round_trip_of_the_sugihara_chain(self) -> None:
        sugihara = tests.common.sugihara()
        parsed, error = parse_algebra(dump_algebra(sugihara))
        self.assertIsNone(error)
        self.assertEqual(sugihara, parsed)

    def test_dump_of_the_fixture_is_stable(self) -> None:
        text = dump_algebra(tests.common.g1())
        self.assertTrue(text.startswith("algebra G1\nsize 2\nelements bot top\n"))
        self.assertIn("const one = top\n", text)
        self.assertTrue(text.endswith("table bang\nbot top\n"))

    def test_load_from_a_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = pathlib.Path(tmp_dir) / "g2.alg"
            path.write_text(dump_algebra(tests.common.g2()), encoding="utf-8")
            algebra, error = load_algebra(path)
            self.assertIsNone(error)
            self.assertEqual(tests.common.g2(), algebra)

    def test_load_a_missing_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp_dir:
            algebra, error = load_algebra(pathlib.Path(tmp_dir) / "missing.alg")
            self.assertIsNone(algebra)
            assert error is not None
            self.assertEqual("INPUT-ERROR", error.code)


if __name__ == "__main__":
    unittest.main()
