"""Smoke tests for the tiverify extension module."""

import tiverify


def test_group_construction():
    s3 = tiverify.symmetric(3)
    assert s3.order == 6
    assert s3.name == "S3"
    assert s3.prime_divisors() == [2, 3]
    assert s3.element_order(0) == 1

    g = tiverify.group_from_generators(["(0 1 2)", "(0 1)"], "S3-custom")
    assert g.order == 6
    assert tiverify.isomorphic(g, s3)

    q8 = tiverify.dicyclic(2)
    assert q8.order == 8
    assert len(tiverify.cyclic(12)) == 12


def test_analysis():
    s3 = tiverify.symmetric(3)
    a = tiverify.analyze(s3)
    assert a["subgroup_count"] == 6
    assert a["conjugacy_class_count"] == 4
    orders = sorted(s["order"] for s in a["subgroups"])
    assert orders == [1, 2, 2, 2, 3, 6]
    whole = a["subgroups"][-1]
    assert whole["normal"] and whole["ti"] and whole["subnormal"]


def test_frobenius():
    a4 = tiverify.alternating(4)
    fd = tiverify.frobenius_decomposition(a4)
    assert fd is not None
    assert fd["kernel_order"] == 4
    assert fd["complement_order"] == 3
    assert tiverify.frobenius_decomposition(tiverify.dicyclic(2)) is None


def test_verify():
    s3 = tiverify.symmetric(3)
    rep = tiverify.verify(s3, 2, "T1")
    assert rep["holds"]
    assert rep["lhs"]
    assert rep["rhs_case"] == "C2"

    s4 = tiverify.symmetric(4)
    rep = tiverify.verify(s4, 2, "T1")
    assert rep["holds"] and not rep["lhs"] and rep["rhs_case"] is None
    assert rep["witness_order"] == 8

    for rep in tiverify.verify_all(tiverify.dihedral(6)):
        assert rep["holds"], rep


def test_corpus_and_enumeration():
    corpus = tiverify.default_corpus()
    assert len(corpus) >= 60
    names = [g.name for g in corpus]
    assert names.count("S3") == 1
    assert len(tiverify.enumerate_all_of_order(8)) == 5

    f20 = tiverify.semidirect_cyclic(5, 4, 2, "Z5:Z4")
    assert f20.order == 20
    fd = tiverify.frobenius_decomposition(f20)
    assert fd["complement_order"] == 4


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
