#include "dimcheck/dimension.hpp"

#include "support/properties.hpp"

#include <doctest.h>

using namespace dimcheck;

namespace {

SystemPtr sys() { return testsupport::econ_system(); }

Dimension dim(const char* base) { return Dimension::base(sys(), base); }

}  // namespace

TEST_CASE("base systems validate their names") {
    CHECK_THROWS_AS(DimensionSystem({"T", "T"}), std::invalid_argument);
    CHECK_THROWS_AS(DimensionSystem({""}), std::invalid_argument);
    CHECK_THROWS_AS(DimensionSystem({"2T"}), std::invalid_argument);
    DimensionSystem ok({"T", "M"});
    CHECK(ok.index_of("M") == 1);
    CHECK(ok.index_of("Q") == -1);
}

TEST_CASE("product composes exponents") {
    // (QK/QL) * (QL/T) -> QK/T
    Dimension lhs = dim("QK") / dim("QL");
    Dimension rhs = dim("QL") / dim("T");
    CHECK(lhs * rhs == dim("QK") / dim("T"));

    Dimension x = dim("QK") / dim("QP");
    CHECK(x * Dimension::one(sys()) == x);

    Dimension half_t = dim("T").pow({1, 2});
    CHECK(half_t * half_t == dim("T"));
}

TEST_CASE("powers scale exponents") {
    Dimension x = dim("QK") / dim("QP");
    Dimension third = x.pow({1, 3});
    CHECK(third.exponent(0) == Rational(1, 3));
    CHECK(third.exponent(2) == Rational(-1, 3));

    CHECK(x.pow(-1) * x == Dimension::one(sys()));
    CHECK(Dimension::one(sys()).pow({7, 3}) == Dimension::one(sys()));
}

TEST_CASE("dimensionless detection") {
    CHECK(Dimension::one(sys()).dimensionless());
    CHECK((dim("QK") * dim("QK").inverse()).dimensionless());
    CHECK_FALSE((dim("QK") / dim("T")).dimensionless());
}

TEST_CASE("mixing base systems is an error") {
    SystemPtr other = DimensionSystem::make({"L", "M"});
    CHECK_THROWS_AS(dim("QK") * Dimension::base(other, "L"), MixedSystemsError);
    // equal base lists are the same system even across instances
    SystemPtr clone = DimensionSystem::make(sys()->names());
    CHECK(Dimension::base(clone, "QK") == dim("QK"));
}

TEST_CASE("canonical strings use declaration order") {
    Dimension a0 = dim("QK").pow({2, 3}) * dim("QP").pow({-2, 3}) / dim("T");
    CHECK(a0.str() == "QK^(2/3)*QP^(-2/3)*T^(-1)");
    CHECK(Dimension::one(sys()).str() == "1");
    CHECK((dim("QK") / dim("T")).str() == "QK*T^(-1)");
    CHECK(dim("QK").pow(2).str() == "QK^(2)");
}

TEST_CASE("from_exponents drops zeros and merges duplicates") {
    Dimension d = Dimension::from_exponents(
        sys(), {{0, Rational(1)}, {0, Rational(-1)}, {4, Rational(0)}, {2, Rational(2)}});
    CHECK(d == dim("QP").pow(2));
    CHECK(d.exponents().size() == 1);
}

TEST_CASE("dimension group laws hold on random inputs") {
    auto res = testsupport::prop_group_laws(1000, 0xd1dc0de);
    INFO(res.first_failure);
    CHECK(res.failures == 0);
    CHECK(res.cases == 1000);
}
