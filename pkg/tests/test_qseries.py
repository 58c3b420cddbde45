"""Exactness and algebra tests for the truncated-series kernel."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookbias.qseries import (
    BivariateSeries,
    DualSeries,
    TruncatedSeries,
    bivariate_product,
    dual_product,
    geometric,
    invert_unit,
    pochhammer,
)

# p(500), computed once by the pentagonal recurrence below and frozen.
P500 = 2300165032574323995027


def pentagonal_partition_counts(limit):
    """Independent oracle: partition numbers via the pentagonal recurrence."""
    counts = [1]
    for m in range(1, limit + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * counts[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            j += 1
        counts.append(total)
    return counts


series_strategy = st.lists(st.integers(-9, 9), min_size=1, max_size=40).map(
    TruncatedSeries
)
unit_series_strategy = st.tuples(
    st.sampled_from([1, -1]), st.lists(st.integers(-9, 9), max_size=40)
).map(lambda p: TruncatedSeries([p[0], *p[1]]))


class TestTruncatedSeriesBasics:
    def test_construction_and_indexing(self):
        s = TruncatedSeries([1, 2, 3])
        assert s.order == 2
        assert s[0] == 1 and s[2] == 3
        assert list(s) == [1, 2, 3]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries([])

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            TruncatedSeries([1, 2.5])

    def test_index_beyond_order_rejected(self):
        s = TruncatedSeries([1, 2])
        with pytest.raises(IndexError):
            s[2]

    def test_monomial_beyond_order_is_zero(self):
        assert TruncatedSeries.monomial(7, 3) == TruncatedSeries.zero(3)

    def test_mismatched_orders_truncate_to_smaller(self):
        a = TruncatedSeries([1, 1, 1, 1, 1])
        b = TruncatedSeries([1, 2])
        assert (a + b).order == 1
        assert (a + b).coeffs == (2, 3)
        assert (a * b).coeffs == (1, 3)

    def test_scalar_arithmetic(self):
        s = TruncatedSeries([0, 1, 2])
        assert (s * 3).coeffs == (0, 3, 6)
        assert (3 * s).coeffs == (0, 3, 6)
        assert (s + 1).coeffs == (1, 1, 2)
        assert (1 - s).coeffs == (1, -1, -2)

    def test_truncate(self):
        s = TruncatedSeries([1, 2, 3, 4])
        assert s.truncate(1).coeffs == (1, 2)
        assert s.truncate(9) is s


class TestMultiplication:
    def test_one_is_identity(self):
        s = TruncatedSeries([3, -1, 4, -1, 5])
        assert TruncatedSeries.one(4) * s == s

    def test_telescoping(self):
        # (1 - q) * (1 + q + ... + q^N) = 1 mod q^(N+1)
        n = 12
        ones = TruncatedSeries([1] * (n + 1))
        one_minus_q = TruncatedSeries.one(n) - TruncatedSeries.monomial(1, n)
        assert one_minus_q * ones == TruncatedSeries.one(n)

    def test_square_of_one_plus_q(self):
        s = TruncatedSeries([1, 1, 0])
        assert (s * s).coeffs == (1, 2, 1)

    @given(series_strategy, series_strategy)
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(series_strategy, series_strategy, series_strategy)
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(series_strategy, series_strategy, series_strategy)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(series_strategy, series_strategy, series_strategy)
    def test_addition_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)


class TestGeometric:
    def test_step_two(self):
        g = geometric(2, 2, 7)
        assert g.coeffs == (0, 0, 1, 0, 1, 0, 1, 0)

    def test_step_six(self):
        g = geometric(3, 6, 10)
        assert [g[n] for n in range(11)] == [0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0]

    def test_all_ones_tail(self):
        assert geometric(1, 1, 3).coeffs == (0, 1, 1, 1)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            geometric(0, 1, 5)
        with pytest.raises(ValueError):
            geometric(1, 0, 5)


class TestPochhammer:
    def test_euler_product_low_order(self):
        # (q; q) through q^5, expanded by hand: 1 - q - q^2 + q^5
        assert pochhammer(1, 1, +1, 5).coeffs == (1, -1, -1, 0, 0, 1)

    def test_negative_sign_counts_distinct_partitions(self):
        # (-q; q) coefficients count partitions into distinct parts;
        # at q^5 these are (5), (4,1), (3,2)
        assert pochhammer(1, 1, -1, 5)[5] == 3

    def test_empty_product_when_leading_exponent_exceeds_order(self):
        assert pochhammer(9, 1, -1, 5) == TruncatedSeries.one(5)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            pochhammer(1, 1, 2, 5)


class TestInvertUnit:
    def test_inverse_of_one_minus_q(self):
        inv = invert_unit(TruncatedSeries.one(6) - TruncatedSeries.monomial(1, 6))
        assert inv.coeffs == (1, 1, 1, 1, 1, 1, 1)

    def test_inverse_of_euler_product_counts_partitions(self):
        # coefficient of q^5 is p(5) = 7: (5),(4,1),(3,2),(3,1,1),(2,2,1),
        # (2,1,1,1),(1,1,1,1,1)
        inv = invert_unit(pochhammer(1, 1, +1, 8))
        assert inv[5] == 7

    def test_rejects_non_unit_constant(self):
        with pytest.raises(ValueError):
            invert_unit(TruncatedSeries([2, 1]))
        with pytest.raises(ValueError):
            invert_unit(TruncatedSeries([0, 1]))

    @given(unit_series_strategy)
    def test_two_sided_inverse(self, s):
        inv = invert_unit(s)
        assert s * inv == TruncatedSeries.one(s.order)
        assert inv * s == TruncatedSeries.one(s.order)

    @given(unit_series_strategy)
    def test_involution(self, s):
        assert invert_unit(invert_unit(s)) == s


class TestEulerIdentity:
    def test_odd_parts_equal_distinct_parts_to_order_200(self):
        # 1/(q; q^2) = (-q; q) coefficientwise
        assert invert_unit(pochhammer(1, 2, +1, 200)) == pochhammer(1, 1, -1, 200)


class TestCoefficientHeadroom:
    def test_partition_numbers_to_500_are_exact(self):
        # p(500) is about 2.3e21, beyond 64-bit range; arbitrary-precision
        # integers must carry it exactly.
        counts = pentagonal_partition_counts(500)
        assert counts[500] == P500
        series = invert_unit(pochhammer(1, 1, +1, 500))
        assert list(series) == counts


class TestDualSeries:
    def test_empty_product(self):
        d = dual_product([], 6)
        assert d.value == TruncatedSeries.one(6)
        assert d.deriv == TruncatedSeries.zero(6)

    def test_single_linear_factor(self):
        # d/dz (1 + z q) = q
        d = dual_product(
            [(TruncatedSeries.one(6), TruncatedSeries.monomial(1, 6))], 6
        )
        assert d.deriv == TruncatedSeries.monomial(1, 6)

    def test_odd_part_marks_count_distinct_part_slots(self):
        # product over odd m of (1 + z q^m/(1 - q^m)): derivative coefficient
        # at q^3 counts length-1 hooks over odd-part partitions of 3,
        # which is 2: one from (3), one from (1,1,1)
        n = 10
        factors = [
            (TruncatedSeries.one(n), geometric(m, m, n))
            for m in range(1, n + 1, 2)
        ]
        d = dual_product(factors, n)
        assert d.deriv[3] == 2

    def test_rejects_factor_without_unit_specialization(self):
        with pytest.raises(ValueError):
            dual_product(
                [(TruncatedSeries.zero(4), TruncatedSeries.monomial(1, 4))], 4
            )

    def test_product_rule(self):
        a = DualSeries(TruncatedSeries([1, 2, 3]), TruncatedSeries([0, 1, 1]))
        b = DualSeries(TruncatedSeries([1, -1, 0]), TruncatedSeries([0, 0, 2]))
        ab = a * b
        assert ab.value == a.value * b.value
        assert ab.deriv == a.value * b.deriv + a.deriv * b.value


@st.composite
def linear_factor_systems(draw):
    order = draw(st.integers(min_value=2, max_value=16))
    count = draw(st.integers(min_value=1, max_value=6))
    factors = []
    for _ in range(count):
        vtail = draw(st.lists(st.integers(-3, 3), min_size=order, max_size=order))
        ztail = draw(st.lists(st.integers(-3, 3), min_size=order, max_size=order))
        factors.append(
            (TruncatedSeries([1] + vtail), TruncatedSeries([0] + ztail))
        )
    return order, factors


class TestDualAgainstBivariate:
    @settings(max_examples=60, deadline=None)
    @given(linear_factor_systems())
    def test_dual_matches_bivariate_moment(self, system):
        # the same product expanded with a real z variable must give back the
        # dual pair via (sum over m) and (sum of m times coefficient)
        order, factors = system
        zdeg = len(factors)
        dual = dual_product(factors, order)
        bfactors = []
        for value, zcoeff in factors:
            rows = [list(value.coeffs), list(zcoeff.coeffs)]
            rows.extend([0] * (order + 1) for _ in range(zdeg - 1))
            bfactors.append(BivariateSeries(rows))
        product = bivariate_product(bfactors, zdeg, order)
        assert product.collapse() == dual.value
        assert product.z_moment() == dual.deriv


class TestBivariateSeries:
    def test_shape_validation(self):
        with pytest.raises(ValueError):
            BivariateSeries([[1, 0], [0]])
        with pytest.raises(ValueError):
            BivariateSeries([])

    def test_coeff_bounds(self):
        b = BivariateSeries([[1, 0], [0, 2]])
        assert b.coeff(1, 1) == 2
        with pytest.raises(IndexError):
            b.coeff(2, 0)

    def test_from_truncated_embeds_at_degree_zero(self):
        s = TruncatedSeries([1, 4, 2])
        b = BivariateSeries.from_truncated(s, 2)
        assert b.z_degree == 2 and b.q_order == 2
        assert b.collapse() == s
        assert b.z_moment() == TruncatedSeries.zero(2)

    def test_product_truncates_both_directions(self):
        z = BivariateSeries([[0, 0], [1, 0]])  # the variable z
        zq = BivariateSeries([[0, 0], [0, 1]])  # z*q
        prod = z * zq
        # z^2 q exceeds z-degree 1, so the truncated product is zero
        assert prod == BivariateSeries.zero(1, 1)

    def test_collapse_and_moment(self):
        # 1 + z(q + q^2) + z^2 q^2
        b = BivariateSeries([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
        assert b.collapse().coeffs == (1, 1, 2)
        assert b.z_moment().coeffs == (0, 1, 3)
