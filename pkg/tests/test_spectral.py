"""Differentials, page-turning, and window certification."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motivic_stems.algebra import Tridegree, Window
from motivic_stems.spectral import (
    Certainty,
    DifferentialSpecError,
    OutOfWindowError,
    build_differential,
    d_sum,
    differential_matrix,
    initial_page,
    leibniz_extend,
    localized_motivic_anss,
    run_to_einfty,
    sum_multiply,
    turn_page,
)


def test_builtin_differential_shape(presentation_and_d3):
    presentation, d3 = presentation_and_d3
    assert d3.page == 3
    assert d3.shift == Tridegree(-1, 3, 0)
    assert d3.images["alpha3"] == frozenset((presentation.monomial(tau=1, alpha1=4),))


def test_leibniz_on_generator_product(presentation_and_d3):
    # d(tau^2 alpha1^-3 alpha3 alpha4): only the alpha3 slot is odd with a
    # nonzero image, so the result is tau^3 alpha1 alpha4.
    presentation, d3 = presentation_and_d3
    m = presentation.monomial(tau=2, alpha1=-3, alpha3=1, alpha4=1)
    expected = presentation.monomial(tau=3, alpha1=1, alpha4=1)
    assert leibniz_extend(presentation, d3, m) == frozenset((expected,))
    assert presentation.degree(expected) - presentation.degree(m) == d3.shift


def test_leibniz_even_exponent_is_zero(presentation_and_d3):
    presentation, d3 = presentation_and_d3
    assert leibniz_extend(presentation, d3, presentation.monomial(alpha3=2)) == frozenset()


def test_leibniz_square_zero_kill(presentation_and_d3):
    # A differential whose image lands on alpha4 gets erased by alpha4^2 = 0.
    presentation, _ = presentation_and_d3
    d = build_differential(presentation, page=2, images={"alpha3": [presentation.monomial(alpha4=1)]})
    assert d.shift == Tridegree(2, 0, 1)
    m = presentation.monomial(alpha3=1, alpha4=1)
    assert leibniz_extend(presentation, d, m) == frozenset()


def test_d_sum_cancellation(presentation_and_d3):
    presentation, d3 = presentation_and_d3
    m = presentation.monomial(alpha3=1)
    assert d_sum(presentation, d3, [m, m]) == frozenset()


def test_sum_multiply_drops_square_zero(presentation_and_d3):
    presentation, _ = presentation_and_d3
    a4 = presentation.monomial(alpha4=1)
    assert sum_multiply(presentation, [a4, presentation.monomial(alpha3=1)], a4) == frozenset(
        (presentation.monomial(alpha3=1, alpha4=1),)
    )


def test_build_differential_rejects_low_page(presentation_and_d3):
    presentation, _ = presentation_and_d3
    with pytest.raises(DifferentialSpecError, match="page must be at least 2"):
        build_differential(presentation, page=1, images={})


def test_build_differential_rejects_mixed_shift(presentation_and_d3):
    presentation, _ = presentation_and_d3
    with pytest.raises(DifferentialSpecError, match="shift"):
        build_differential(
            presentation,
            page=3,
            images={
                "alpha3": [
                    presentation.monomial(tau=1, alpha1=4),
                    presentation.monomial(alpha4=1),
                ]
            },
        )
    with pytest.raises(DifferentialSpecError, match="expected"):
        build_differential(
            presentation,
            page=3,
            images={"alpha3": [presentation.monomial(tau=1, alpha1=4)]},
            shift=Tridegree(0, 0, 0),
        )


def test_initial_page_is_monomial_basis(presentation_and_d3, einfty_window):
    presentation, _ = presentation_and_d3
    state = initial_page(presentation, einfty_window)
    assert state.page == 2
    assert all(status is Certainty.VALID for status in state.status.values())
    t = Tridegree(5, 1, 3)
    assert state.classes[t] == [frozenset((presentation.monomial(alpha3=1),))]
    with pytest.raises(OutOfWindowError):
        state.fiber(Tridegree(999, 999, 999))


def test_differential_matrix_alpha3_line(presentation_and_d3, einfty_window):
    presentation, d3 = presentation_and_d3
    state = initial_page(presentation, einfty_window, page=3)
    m = differential_matrix(state, d3, Tridegree(5, 1, 3))
    assert (m.rows, m.n_rows, m.n_cols) == ((1,), 1, 1)
    assert m.rank() == 1
    zero = differential_matrix(state, d3, Tridegree(4, 4, 4))
    assert zero.rows == (0,)
    with pytest.raises(OutOfWindowError, match="not covered"):
        differential_matrix(state, d3, Tridegree(999, 999, 999))


def test_differential_matrix_escaping_image(presentation_and_d3):
    # With tau clamped to zero the image tau*alpha1^4 of alpha3 has nowhere to
    # land, and the matrix refuses to silently truncate it.
    presentation, d3 = presentation_and_d3
    window = Window.from_dict(
        presentation, {"tau": (0, 0), "alpha1": (-8, 8), "alpha3": (0, 2), "alpha4": (0, 1)}
    )
    state = initial_page(presentation, window, page=3)
    with pytest.raises(OutOfWindowError, match="falls outside the window"):
        differential_matrix(state, d3, Tridegree(5, 1, 3))


def test_turn_page_requires_matching_page(presentation_and_d3, einfty_window):
    presentation, d3 = presentation_and_d3
    state = initial_page(presentation, einfty_window, page=2)
    with pytest.raises(ValueError, match="page 3"):
        turn_page(state, d3)


def test_turn_page_kills_the_d3_image(presentation_and_d3, einfty_window):
    presentation, d3 = presentation_and_d3
    state = turn_page(initial_page(presentation, einfty_window, page=3), d3)
    assert state.page == 4
    hit = Tridegree(4, 4, 3)  # tau * alpha1^4, the image of alpha3
    assert state.classes[hit] == []
    assert state.status[hit] is Certainty.VALID
    source = Tridegree(5, 1, 3)
    assert state.classes[source] == []
    survivor = Tridegree(4, 4, 4)  # alpha1^4 carries no tau and survives
    assert state.classes[survivor] == [frozenset((presentation.monomial(alpha1=4),))]
    assert state.status[survivor] is Certainty.VALID
    assert survivor in state.valid_classes()
    assert Certainty.INDETERMINATE in set(state.status.values())


def test_truncated_window_is_flagged_indeterminate(presentation_and_d3):
    # In a window without tau the differential out of alpha3 escapes, so
    # alpha3 appears to survive; the page turn must not certify that fiber.
    presentation, d3 = presentation_and_d3
    window = Window.from_dict(
        presentation, {"tau": (0, 0), "alpha1": (-8, 8), "alpha3": (0, 2), "alpha4": (0, 1)}
    )
    state = turn_page(initial_page(presentation, window, page=3), d3)
    t = Tridegree(5, 1, 3)
    assert state.classes[t] == [frozenset((presentation.monomial(alpha3=1),))]
    assert state.status[t] is Certainty.INDETERMINATE
    assert t not in state.valid_classes()


def test_run_to_einfty_page_order(presentation_and_d3, einfty_window):
    presentation, d3 = presentation_and_d3
    d5 = build_differential(presentation, page=5, images={})
    with pytest.raises(DifferentialSpecError, match="increasing page order"):
        run_to_einfty(presentation, [d5, d3], einfty_window)
    with pytest.raises(DifferentialSpecError, match="increasing page order"):
        run_to_einfty(presentation, [d3, d3], einfty_window)


def test_run_to_einfty_skips_unlisted_pages(presentation_and_d3, einfty_window):
    presentation, d3 = presentation_and_d3
    d5 = build_differential(presentation, page=5, images={})
    once = run_to_einfty(presentation, [d3], einfty_window)
    twice = run_to_einfty(presentation, [d3, d5], einfty_window)
    assert twice.page == 6
    assert twice.classes == once.classes
    # A zero differential is forward- and backward-closed everywhere, so the
    # extra page turn keeps every certification.
    assert twice.status == once.status


exponents = st.tuples(
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=1),
)


@given(exponents)
def test_d3_squares_to_zero(exps):
    presentation, diffs = localized_motivic_anss()
    d3 = diffs[0]
    m = presentation.monomial(tau=exps[0], alpha1=exps[1], alpha3=exps[2], alpha4=exps[3])
    assert d_sum(presentation, d3, leibniz_extend(presentation, d3, m)) == frozenset()


@given(exponents, exponents)
def test_d3_satisfies_leibniz(e1, e2):
    presentation, diffs = localized_motivic_anss()
    d3 = diffs[0]
    names = ("tau", "alpha1", "alpha3", "alpha4")
    m1 = presentation.monomial(**dict(zip(names, e1)))
    m2 = presentation.monomial(**dict(zip(names, e2)))
    product = presentation.multiply(m1, m2)
    lhs = leibniz_extend(presentation, d3, product) if product is not None else frozenset()
    rhs = sum_multiply(presentation, leibniz_extend(presentation, d3, m1), m2) ^ sum_multiply(
        presentation, leibniz_extend(presentation, d3, m2), m1
    )
    assert lhs == rhs
