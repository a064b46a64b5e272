"""Smoke test for the `inideal` extension module.

Build and install it first, e.g. `maturin develop -m crates/python/Cargo.toml`,
then run `python python/smoke_test.py`.
"""

import inideal


def main():
    R = inideal.Ring(["x", "y", "z"])
    x, y, z = R.gens()
    assert str(x**2 - y) == "x^2 - y"
    assert str((x + 1) * (x - 1)) == str(R.parse("x^2 - 1"))

    I = inideal.Ideal(R, ["x^2 - y", x * y - z])
    G = I.groebner_basis("lex")
    assert [str(g) for g in G.elements] == ["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"]
    assert G.contains("x*z - y^2")
    assert str(G.normal_form("x^3")) == "z"

    ini = sorted(str(m) for m in I.initial_ideal("lex"))
    assert ini == ["x*y", "x*z", "x^2", "y^3"], ini
    assert I.krull_dim("lex") == 1

    a = I.weight_for("lex")
    assert sorted(str(m) for m in I.initial_ideal("lex", weight=a)) == ini

    fam = I.family(weight=a, tiebreak="lex")
    assert fam.is_free()
    assert sorted(str(g) for g in fam.fiber("1")) == sorted(str(g) for g in G.elements)

    # twisted cubic as a homogeneous ideal
    P = inideal.Ring(["a", "b", "c", "d"])
    C = inideal.Ideal(P, ["a*c - b^2", "a*d - b*c", "b*d - c^2"])
    h = C.hilbert_series()
    assert h.function(5) == [1, 4, 7, 10, 13, 16]
    B = C.betti()
    assert B.complete and B[(1, 2)] == 3 and B[(2, 3)] == 2
    assert (B.projdim(), B.reg()) == (2, 1)

    S = inideal.Ring(["x", "y"])
    A = inideal.Subalgebra(S, ["x + y", "x*y", "x*y^2"])
    passed, witnesses = A.sagbi_test("deglex")
    assert not passed and witnesses
    gens, confirmed = A.sagbi("deglex", cap=6)
    assert not confirmed and len(gens) > 3
    values, _ = A.hilbert_function(5, "deglex")
    assert values == [1, 1, 2, 3, 4, 5]

    assert inideal.find_weight(S, [("x", "y^2")]) == [3, 1]
    try:
        inideal.find_weight(S, [("x", "y"), ("y", "x")])
    except inideal.Infeasible as e:
        assert list(e.args[1]) == [1, 1]
    else:
        raise AssertionError("expected Infeasible")

    inideal.set_step_limit(1)
    try:
        I.groebner_basis("lex")
    except inideal.StepLimitExceeded:
        pass
    else:
        raise AssertionError("expected StepLimitExceeded")
    finally:
        inideal.set_step_limit(None)

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
