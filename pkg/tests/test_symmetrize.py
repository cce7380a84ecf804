import random

import pytest
from hypothesis import given, settings, strategies as st

from opgb.orderings import DEFAULT_ORDERING
from opgb.permutations import compose, identity
from opgb.polynomials import OperadPolynomial
from opgb.symmetrize import ActionError, GeneratorAction, act, canonicalize, orbit_closure
from opgb.trees import Generator, is_shuffle_monomial

from helpers import T, random_polynomial

b = Generator("b", 2, 0)
lie = GeneratorAction([b], {("b", 1): {"b": -1}})

mu = Generator("m", 2, 0)
mop = Generator("mop", 2, 1)
assoc = GeneratorAction([mu, mop], {("m", 1): {"mop": 1}, ("mop", 1): {"m": 1}})

# a non-monomial action: s1 fixes p and sends q to p - q
p_ = Generator("p", 2, 0)
q_ = Generator("q", 2, 1)
c3 = Generator("c", 3, 2)
mixed = GeneratorAction([p_, q_, c3], {("p", 1): {"p": 1}, ("q", 1): {"p": 1, "q": -1},
                                       ("c", 1): {"c": -1}, ("c", 2): {"c": -1}})

CASES = [([b], lie), ([mu, mop], assoc), ([p_, q_, c3], mixed)]


def poly(pairs):
    return OperadPolynomial.from_terms(pairs, DEFAULT_ORDERING)


def test_examples():
    f = poly([(T(b, 1, 2), 1)])
    assert act((1, 2), f, lie) == f
    assert act((2, 1), f, lie) == -f
    g = poly([(T(b, T(b, 1, 2), 3), 1)])
    assert act((2, 1, 3), g, lie) == -g


def test_linear_combination_action():
    assert canonicalize(T(q_, 2, 1), mixed) == {T(p_, 1, 2): 1, T(q_, 1, 2): -1}


def test_missing_action():
    with pytest.raises(ActionError):
        canonicalize(T(b, 2, 1), None)
    with pytest.raises(ActionError):
        canonicalize(T(b, 2, 1), GeneratorAction([b]))
    assert canonicalize(T(b, 1, 2), None) == {T(b, 1, 2): 1}


def test_table_validation():
    with pytest.raises(ActionError):
        GeneratorAction([b], {("b", 2): {"b": 1}})
    with pytest.raises(ActionError):
        GeneratorAction([b, c3], {("b", 1): {"c": 1}})
    with pytest.raises(ActionError):
        GeneratorAction([b], {("x", 1): {"b": 1}})


def test_involutions():
    for _, actions in CASES:
        actions.check_involutions()
    bad = GeneratorAction([p_, q_], {("p", 1): {"q": 1}, ("q", 1): {"q": 1}})
    with pytest.raises(ActionError):
        bad.check_involutions()


def test_orbit_closure():
    assert orbit_closure([], lie) == []
    jacobi = poly([(T(b, T(b, 1, 2), 3), 1), (T(b, T(b, 1, 3), 2), -1), (T(b, 1, T(b, 2, 3)), -1)])
    orbit = orbit_closure([jacobi], lie)
    # the Jacobi element spans a one-dimensional representation up to sign
    assert orbit == [jacobi.monic()]
    single = poly([(T(b, 1, 2), 1)])
    assert len(orbit_closure([single], lie)) == 1


def test_orbit_is_stable():
    rel = poly([(T(mu, T(mu, 1, 2), 3), 1), (T(mu, 1, T(mu, 2, 3)), -1)])
    orbit = orbit_closure([rel], assoc)
    assert len(orbit) == 6
    monics = set(orbit)
    for f in orbit:
        for i in range(1, f.arity):
            s = list(identity(f.arity))
            s[i - 1], s[i] = s[i], s[i - 1]
            assert act(tuple(s), f, assoc).monic() in monics


def _random_element(rng, gens, n):
    return random_polynomial(rng, gens, n, terms=3)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 2), st.integers(2, 5))
def test_composition_law(seed, case, n):
    gens, actions = CASES[case]
    rng = random.Random(seed)
    f = _random_element(rng, gens, n)
    sigma = tuple(rng.sample(range(1, n + 1), n))
    tau = tuple(rng.sample(range(1, n + 1), n))
    assert act(sigma, act(tau, f, actions), actions) == act(compose(sigma, tau), f, actions)
    assert act(identity(n), f, actions) == f


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 2), st.integers(2, 5))
def test_linearity_and_involution(seed, case, n):
    gens, actions = CASES[case]
    rng = random.Random(seed)
    f, g = _random_element(rng, gens, n), _random_element(rng, gens, n)
    sigma = tuple(rng.sample(range(1, n + 1), n))
    assert act(sigma, f + g, actions) == act(sigma, f, actions) + act(sigma, g, actions)
    for i in range(1, n):
        s = list(identity(n))
        s[i - 1], s[i] = s[i], s[i - 1]
        assert act(tuple(s), act(tuple(s), f, actions), actions) == f
    for t, _ in act(sigma, f, actions).items():
        assert is_shuffle_monomial(t)
