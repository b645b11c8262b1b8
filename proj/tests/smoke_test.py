"""Smoke tests for the _perron extension module.

Locates the built module through PERRON_PYMODULE_DIR (set by CTest) or falls
back to scanning the usual build directories.
"""

import json
import os
import sys
from fractions import Fraction

module_dir = os.environ.get("PERRON_PYMODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
else:
    here = os.path.dirname(os.path.abspath(__file__))
    for candidate in ("build/bindings", "build"):
        sys.path.insert(0, os.path.join(here, "..", candidate))

import _perron as perron  # noqa: E402


def test_exact_arithmetic_round_trip():
    m = perron.NonNegIntMatrix.from_rows([[2]])
    big = perron.mat_pow(m, 200)
    assert big.at(0, 0) == 2**200

    fib = perron.NonNegIntMatrix.from_rows([[0, 1], [1, 1]])
    assert perron.mat_pow(fib, 5).rows() == [[3, 5], [5, 8]]
    assert perron.path_count(fib, 0, 1, 3) == 2


def test_spectral_interval_is_exact_fractions():
    fib = perron.NonNegIntMatrix.from_rows([[0, 1], [1, 1]])
    interval = perron.spectral_radius(fib, Fraction(1, 10**6))
    assert isinstance(interval.lower, Fraction)
    assert interval.upper - interval.lower <= Fraction(1, 10**6)
    # lower <= golden ratio <= upper, checked exactly
    assert interval.lower**2 <= interval.lower + 1
    assert interval.upper**2 >= interval.upper + 1

    bounds = perron.collatz_wielandt(fib, perron.ConeVector([Fraction(2), Fraction(3)]))
    assert bounds.lower == Fraction(3, 2)
    assert bounds.upper == Fraction(5, 3)


def test_certificates_round_trip_and_reject_tampering():
    fib = perron.NonNegIntMatrix.from_rows([[0, 1], [1, 1]])
    cert = perron.certify(fib)
    assert cert.n_prime == 2
    assert cert.power_column_sums == [2, 3]
    assert cert.exponent_n_prime() == Fraction(1, 2)
    assert perron.check(fib, cert)

    payload = json.loads(cert.to_json())
    assert payload["power_column_sums"] == ["2", "3"]
    assert payload["dominant_vertices"] == [1, 2]  # 1-based on the wire
    assert perron.check(fib, perron.PennerCertificate.from_json(cert.to_json()))

    payload["power_column_sums"] = ["1", "3"]
    assert not perron.check(fib, perron.PennerCertificate.from_json(json.dumps(payload)))


def test_family_operator_and_graph_structure():
    op = perron.family_operator(8)
    assert not perron.is_perron_frobenius(op)
    assert perron.exceeds_one(op)

    interval = perron.spectral_radius(op, Fraction(1, 1000))
    assert interval.lower == 2 and interval.upper == 2

    dom = perron.dominant_component(op)
    assert dom.vertices == [1]
    assert perron.restrict_to(op, dom.vertices).rows() == [[2]]

    x = perron.family_eigenvector(6)
    assert x.coords == [1, 2, Fraction(1, 2), 1, Fraction(1, 4), Fraction(1, 2)]

    scc = perron.scc_decompose(op)
    assert len(scc.components) == 8
    assert perron.classify_component(op, [1]) == perron.SccClass.expanding

    report = perron.sharpness_report(4, 4)
    assert report.ratio == 3


def test_substitution_entropy():
    sub = perron.Substitution.parse("a -> a b\nb -> a\n")
    assert perron.incidence_matrix(sub).rows() == [[1, 1], [1, 0]]
    interval = perron.entropy_interval(sub, Fraction(1, 10**6))
    assert interval.lower**2 <= interval.lower + 1
    assert interval.upper**2 >= interval.upper + 1
    assert perron.arc_count_admissible(sub, 1)


def test_errors_surface_as_python_exceptions():
    try:
        perron.NonNegIntMatrix.from_rows([[1, -1], [0, 1]])
    except perron.Error as e:
        assert "negative" in str(e)
    else:
        raise AssertionError("expected perron.Error") from None

    rotation = perron.NonNegIntMatrix.from_rows([[0, 1], [1, 0]])
    try:
        perron.certify(rotation)
    except perron.Error as e:
        assert "eigenvalue" in str(e)
    else:
        raise AssertionError("expected perron.Error") from None


def main():
    tests = [
        test_exact_arithmetic_round_trip,
        test_spectral_interval_is_exact_fractions,
        test_certificates_round_trip_and_reject_tampering,
        test_family_operator_and_graph_structure,
        test_substitution_entropy,
        test_errors_surface_as_python_exceptions,
    ]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
