#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/field.hpp"

using namespace ramsey;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(std::uint32_t limit) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t q = 2; q <= limit; ++q) {
        if (const auto pk = prime_power_decompose(q)) out.push_back(*pk);
    }
    return out;
}

}  // namespace

TEST_CASE("construction and the deterministic modulus") {
    const FieldSpec gf2(2, 1);
    CHECK(gf2.q() == 2);
    const FieldSpec gf4(2, 2);
    CHECK(gf4.modulus() == std::vector<std::uint16_t>{1, 1, 1});  // x^2 + x + 1
    const FieldSpec gf3(3, 1);
    CHECK(gf3.q() == 3);

    CHECK_THROWS_AS(FieldSpec(4, 1), SpecError);   // composite characteristic
    CHECK_THROWS_AS(FieldSpec(2, 17), SpecError);  // above the order cap
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), SpecError);  // x^2+1 reducible
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 1}), SpecError);     // wrong length
}

TEST_CASE("arithmetic examples") {
    const FieldSpec gf2(2, 1);
    CHECK(gf2.add(1, 1) == 0);
    const FieldSpec gf4(2, 2);
    CHECK(gf4.mul(2, 2) == 3);  // x * x = x + 1 modulo x^2 + x + 1
    const FieldSpec gf3(3, 1);
    CHECK(gf3.pow(2, 2) == 1);
    CHECK_THROWS_AS(gf3.inv(0), std::domain_error);
}

TEST_CASE("GF(4) tables match the frozen oracle") {
    const FieldSpec gf4(2, 2);
    for (std::uint16_t a = 0; a < 4; ++a)
        for (std::uint16_t b = 0; b < 4; ++b) {
            CHECK(gf4.add(a, b) == oracles::gf4_add[a][b]);
            CHECK(gf4.mul(a, b) == oracles::gf4_mul[a][b]);
        }
}

TEST_CASE("field axioms exhaustively for q <= 16") {
    for (const auto [p, k] : prime_powers_up_to(16)) {
        const FieldSpec f(p, k);
        const auto elems = f.all_elements();
        for (auto a : elems) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            for (auto b : elems) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (auto c : elems) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("unit powers and inverses for q <= 256") {
    for (const auto [p, k] : prime_powers_up_to(256)) {
        const FieldSpec f(p, k);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            const auto e = static_cast<FieldElem>(a);
            CHECK(f.pow(e, f.q() - 1) == f.one());
            CHECK(f.mul(e, f.inv(e)) == f.one());
        }
    }
}

TEST_CASE("x^q - x is the zero polynomial function") {
    for (const auto [p, k] : prime_powers_up_to(16)) {
        const FieldSpec f(p, k);
        for (auto a : f.all_elements()) CHECK(f.sub(f.pow(a, f.q()), a) == 0);
    }
}

TEST_CASE("element enumeration order and coefficients") {
    const FieldSpec gf9(3, 2);
    const auto elems = gf9.all_elements();
    REQUIRE(elems.size() == 9);
    CHECK(elems[0] == gf9.zero());
    CHECK(elems[1] == gf9.one());
    std::set<FieldElem> distinct(elems.begin(), elems.end());
    CHECK(distinct.size() == 9);
    for (auto a : elems) CHECK(gf9.from_coefficients(gf9.coefficients(a)) == a);
    CHECK(gf9.coefficients(5) == std::vector<std::uint16_t>{2, 1});  // 2 + 1*3
}

TEST_CASE("alphabet injection") {
    const FieldSpec gf2(2, 1);
    const auto inj2 = inject_alphabet(2, gf2);
    CHECK(inj2 == std::vector<FieldElem>{0, 1});
    const FieldSpec gf3(3, 1);
    CHECK(inject_alphabet(3, gf3) == std::vector<FieldElem>{0, 1, 2});
    const FieldSpec gf4(2, 2);
    const auto inj3 = inject_alphabet(3, gf4);
    std::set<FieldElem> distinct(inj3.begin(), inj3.end());
    CHECK(distinct.size() == 3);
    CHECK_THROWS_AS(inject_alphabet(3, gf2), SpecError);
}

TEST_CASE("a corrupted field fails the unit-power suite") {
    const FieldSpec bad = FieldSpec::unchecked(2, 2, {1, 0, 1});  // x^2 + 1 = (x+1)^2
    bool caught = false;
    for (std::uint32_t a = 1; a < bad.q(); ++a) {
        const auto e = static_cast<FieldElem>(a);
        if (bad.pow(e, bad.q() - 1) != 1) caught = true;
        try {
            if (bad.mul(e, bad.inv(e)) != 1) caught = true;
        } catch (const std::exception&) {
            caught = true;
        }
    }
    CHECK(caught);
}

TEST_CASE("prime power helpers") {
    CHECK(prime_power_decompose(8) == std::pair{2u, 3u});
    CHECK(prime_power_decompose(9) == std::pair{3u, 2u});
    CHECK_FALSE(prime_power_decompose(6).has_value());
    CHECK_FALSE(prime_power_decompose(1).has_value());
    CHECK(least_prime_power_at_least(6) == 7);
    CHECK(least_prime_power_at_least(2) == 2);
}

TEST_CASE("large-degree field still constructs") {
    const FieldSpec gf256(2, 8);
    CHECK(gf256.q() == 256);
    // spot-check Fermat in the largest permitted field
    const FieldSpec gf65536(2, 16);
    CHECK(gf65536.q() == 65536);
    CHECK(gf65536.mul(gf65536.inv(1234), 1234) == 1);
}
