#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gaussdet/neville.hpp"
#include "oracles.hpp"

using namespace gaussdet;

namespace {

EtaRatFunc eta_pow(std::int64_t e) { return EtaPoly::monomial(e); }

EtaPoly h(std::int64_t q) { return poly_h(q); }

EtaPoly poly_of(const EtaRatFunc& f)
{
    REQUIRE(f.is_polynomial());
    return f.num();
}

const std::vector<BigRational> kEtas = {BigRational(1, 10), BigRational(1, 2), BigRational(9, 10)};

std::vector<std::vector<BigRational>> numeric_rows(const NumericMatrix& m)
{
    std::vector<std::vector<BigRational>> rows(m.size(), std::vector<BigRational>(m.size()));
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            rows[i - 1][j - 1] = m(i, j);
    return rows;
}

} // namespace

TEST_SUITE("covariance")
{
    TEST_CASE("symbolic entries")
    {
        const SymbolicMatrix v = build_covariance_symbolic(3);
        CHECK(v(1, 1) == eta_pow(0));
        CHECK(v(1, 2) == eta_pow(1));
        CHECK(v(1, 3) == eta_pow(4));
        CHECK(v(3, 1) == eta_pow(4));
        const SymbolicMatrix big = build_covariance_symbolic(6);
        for (std::size_t i = 1; i <= 6; ++i)
            for (std::size_t j = 1; j <= 6; ++j) {
                const auto d = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
                CHECK(big(i, j) == eta_pow(d * d));
                CHECK(big(i, j) == big(j, i));
            }
    }

    TEST_CASE("numeric entries at one half")
    {
        const NumericMatrix v = build_covariance_numeric(3, BigRational(1, 2));
        CHECK(v(1, 1) == BigRational(1));
        CHECK(v(1, 2) == BigRational(1, 2));
        CHECK(v(1, 3) == BigRational(1, 16));
        CHECK(v(2, 3) == BigRational(1, 2));
    }

    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS(build_covariance({0, BigRational(1), std::nullopt}), std::invalid_argument);
        CHECK_THROWS_AS(build_covariance({3, BigRational(0), std::nullopt}), std::invalid_argument);
        CHECK_THROWS_AS(build_covariance({3, BigRational(1), BigRational(0)}), std::invalid_argument);
        CHECK_THROWS_AS(build_covariance({3, BigRational(1), BigRational(1)}), std::invalid_argument);
        CHECK_THROWS_AS(build_covariance_numeric(3, BigRational(3, 2)), std::invalid_argument);
        const CovarianceMatrix m = build_covariance({2, BigRational(5), BigRational(1, 2)});
        CHECK(m.sigma_z_sq == BigRational(5));
        CHECK(std::holds_alternative<NumericMatrix>(m.scaled));
    }

    TEST_CASE("sigma scaling is kept out of the matrix")
    {
        CHECK(full_determinant(BigRational(2), 3, BigRational(3, 4)) == BigRational(6));
        CHECK(full_determinant(BigRational(1), 5, BigRational(7, 9)) == BigRational(7, 9));
    }
}

TEST_SUITE("neville")
{
    TEST_CASE("stage entries for n = 3")
    {
        const auto trace = neville_eliminate(build_covariance_symbolic(3));
        REQUIRE(trace.size() == 3);
        CHECK(trace.at(2, 2, 2) == EtaRatFunc(EtaPoly::monomial(0) - EtaPoly::monomial(2)));
        CHECK(trace.at(2, 3, 2) == EtaRatFunc(EtaPoly::monomial(1) - EtaPoly::monomial(5)));
        CHECK(trace.at(2, 2, 3) == EtaRatFunc(EtaPoly::monomial(1) - EtaPoly::monomial(5)));
        CHECK(trace.at(3, 3, 3) == EtaRatFunc(h(1) * h(2)));
        CHECK(trace.at(3, 3, 2).is_zero());
        CHECK(trace.at(2, 3, 1).is_zero());
    }

    TEST_CASE("trace shape")
    {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto trace = neville_eliminate(build_covariance_symbolic(n));
            REQUIRE(trace.size() == n);
            CHECK(trace.stage(1) == build_covariance_symbolic(n));
            for (std::size_t s = 2; s <= n; ++s)
                for (std::size_t i = 1; i <= n; ++i)
                    for (std::size_t j = 1; j <= n; ++j) {
                        if (i < s)
                            CHECK(trace.at(s, i, j) == trace.at(s - 1, i, j));
                        else if (j < s)
                            CHECK(trace.at(s, i, j).is_zero());
                    }
        }
        CHECK_THROWS_AS(neville_eliminate(build_covariance_symbolic(2)).stage(3), std::out_of_range);
        CHECK_THROWS_AS(neville_eliminate(build_covariance_symbolic(2)).stage(0), std::out_of_range);
    }

    TEST_CASE("diagonal product equals the Leibniz and cofactor determinants")
    {
        for (std::size_t n = 1; n <= 6; ++n) {
            const SymbolicMatrix v = build_covariance_symbolic(n);
            const EtaRatFunc pivots = diagonal_product(neville_eliminate(v));
            const EtaPoly cofactor = oracle::cofactor_det(oracle::gaussian_covariance(n));
            CHECK(poly_of(pivots) == cofactor);
            CHECK(brute_force_det(v) == EtaRatFunc(cofactor));
            for (const BigRational& eta : kEtas) {
                const NumericMatrix vn = build_covariance_numeric(n, eta);
                const BigRational numeric = diagonal_product(neville_eliminate(vn));
                CHECK(numeric == cofactor.eval(eta));
                CHECK(numeric == brute_force_det(vn));
                CHECK(numeric == oracle::gauss_det(numeric_rows(vn)));
            }
        }
    }

    TEST_CASE("symbolic elimination commutes with evaluation")
    {
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto symbolic = neville_eliminate(build_covariance_symbolic(n));
            for (const BigRational& eta : kEtas) {
                const auto numeric = neville_eliminate(build_covariance_numeric(n, eta));
                for (std::size_t s = 1; s <= n; ++s)
                    CHECK(evaluate(symbolic.stage(s), eta) == numeric.stage(s));
            }
        }
    }

    TEST_CASE("every stage entry is a polynomial")
    {
        for (std::size_t n = 1; n <= 8; ++n)
            CHECK(trace_is_polynomial(neville_eliminate(build_covariance_symbolic(n))));
    }

    TEST_CASE("pivots are positive inside the unit interval")
    {
        for (std::size_t n = 1; n <= 8; ++n)
            for (const BigRational& eta : kEtas) {
                const auto trace = neville_eliminate(build_covariance_numeric(n, eta));
                for (std::size_t s = 1; s <= n; ++s)
                    CHECK(trace.at(s, s, s).sign() > 0);
            }
    }

    TEST_CASE("n = 3 at one half")
    {
        const auto trace = neville_eliminate(build_covariance_numeric(3, BigRational(1, 2)));
        CHECK(diagonal_product(trace) == BigRational(135, 256));
        CHECK(trace.at(2, 2, 2) == BigRational(3, 4));
        CHECK(trace.at(3, 3, 3) == BigRational(45, 64));
    }

    TEST_CASE("zero pivot is reported with its stage")
    {
        const auto m = NumericMatrix::from_rows({{BigRational(1), BigRational(1)}, {BigRational(1), BigRational(1)}});
        // The last pivot is never divided by, so a singular 2x2 still eliminates.
        CHECK(diagonal_product(neville_eliminate(m)).is_zero());

        const auto singular = NumericMatrix::from_rows({{BigRational(1), BigRational(1), BigRational(2)},
                                                        {BigRational(1), BigRational(1), BigRational(3)},
                                                        {BigRational(0), BigRational(4), BigRational(5)}});
        try {
            neville_eliminate(singular);
            FAIL("expected ZeroPivotError");
        } catch (const ZeroPivotError& e) {
            CHECK(e.stage() == 2);
            CHECK(std::string(e.what()) == "zero pivot U(2,2,2)");
        }
        const auto leading_zero =
            NumericMatrix::from_rows({{BigRational(0), BigRational(1)}, {BigRational(1), BigRational(0)}});
        CHECK_THROWS_AS(neville_eliminate(leading_zero), ZeroPivotError);
    }

    TEST_CASE("non-square input")
    {
        CHECK_THROWS_AS(NumericMatrix::from_rows({{BigRational(1), BigRational(2)}, {BigRational(3)}}),
                        NonSquareInput);
        CHECK_THROWS_AS(NumericMatrix::from_rows({{BigRational(1), BigRational(2)}}), NonSquareInput);
        CHECK_THROWS_AS(build_covariance_symbolic(2)(3, 1), std::out_of_range);
    }

    TEST_CASE("oracle bound")
    {
        CHECK_THROWS_AS(brute_force_det(build_covariance_numeric(9, BigRational(1, 2))), OracleBoundError);
        CHECK_THROWS_AS(brute_force_det(build_covariance_numeric(4, BigRational(1, 2)), 3), OracleBoundError);
        CHECK_NOTHROW(brute_force_det(build_covariance_numeric(4, BigRational(1, 2)), 4));
    }

    TEST_CASE("trace dump matches the golden file")
    {
        std::ifstream in(std::string(GAUSSDET_GOLDEN_DIR) + "/trace_n3.txt");
        REQUIRE(in.good());
        std::stringstream expected;
        expected << in.rdbuf();
        CHECK(dump_trace(neville_eliminate(build_covariance_symbolic(3))) == expected.str());
    }

    TEST_CASE("numeric dump")
    {
        const std::string dump = dump_trace(neville_eliminate(build_covariance_numeric(2, BigRational(1, 2))));
        CHECK(dump == "stage 1\n[1, 1/2]\n[1/2, 1]\n\nstage 2\n[1, 1/2]\n[0, 3/4]\n");
    }
}
