#include "qsc/checker.hpp"

#include <doctest.h>

using namespace qsc;

TEST_CASE("a strong-case claim holds with a fully detailed verdict") {
    CongruenceClaim claim{make_spec(Family::Thm1_1, 5, 3),
                          modulus_for_theorem(5, 3, TheoremCase::Thm1_1)};
    Verdict v = check(claim);
    CHECK(v.holds);
    CHECK(v.failing_factor.empty());
    CHECK(v.modulus == "Phi_5^2");
    CHECK(v.num_terms > 0);
    CHECK(v.id == "thm1.1/n=5/d=3/r=1/M=4/mod=Phi_5^2");
    REQUIRE(v.coprimality.size() == 1);
    CHECK(v.coprimality[0].find("certified") != std::string::npos);
}

TEST_CASE("composite-n claims absorb shared denominator factors") {
    // (q^3;q^3)_k denominators legitimately contain 1 - q^6, which Phi_2
    // divides; the claim must still be decided, not aborted
    CongruenceClaim claim{make_spec(Family::Lemma2_2, 4, 3, 1, 3), ModulusSpec{}};
    claim.modulus.factors = {{2, 1}, {4, 1}};
    Verdict v = check(claim);
    CHECK(v.holds);
    bool mentions_absorbed = false;
    for (const auto& line : v.coprimality)
        mentions_absorbed = mentions_absorbed || line.find("absorbed") != std::string::npos;
    CHECK(mentions_absorbed);
}

TEST_CASE("a mutated sum yields FALSE with the failing factor named") {
    SumSpec bad = make_spec(Family::Thm1_1, 5, 3);
    bad.mono_bump = 1;
    ModulusSpec mod;
    mod.factors = {{5, 1}};
    Verdict v = check(CongruenceClaim{bad, mod});
    CHECK_FALSE(v.holds);
    CHECK(v.failing_factor.find("Phi_5") != std::string::npos);
}

TEST_CASE("an overclaimed power fails at the first unsupported power") {
    SumSpec s = make_spec(Family::Thm1_1, 4, 3); // weak case: only [4]
    ModulusSpec inflated;
    inflated.factors = {{4, 3}};
    Verdict v = check(CongruenceClaim{s, inflated});
    CHECK_FALSE(v.holds);
    CHECK(v.failing_factor.find("Phi_4") != std::string::npos);
}

TEST_CASE("mixed-modulus proof step") {
    Verdict v = check_mixed(2, 3, 1, 1);
    CHECK(v.holds);
    Verdict v2 = check_mixed(5, 3, 1, 3);
    CHECK(v2.holds);
    CHECK(v2.modulus == "(c - q^10)*Phi_5");
}

TEST_CASE("term-flip congruence at single indices") {
    for (unsigned k = 0; k <= 3; ++k) {
        Verdict v = check_lemma_2_1(5, 3, 1, 3, k);
        CHECK(v.holds);
    }
    CHECK_THROWS_AS(check_lemma_2_1(5, 3, 1, 2, 0), std::invalid_argument); // 3*2 != -1 (mod 5)
    CHECK_THROWS_AS(check_lemma_2_1(5, 3, 1, 3, 4), std::invalid_argument); // k > m
}

TEST_CASE("grid naming round-trip and a small deterministic grid") {
    for (GridFamily f : {GridFamily::Thm1_1, GridFamily::Thm1_2, GridFamily::Eq1_5,
                         GridFamily::Lemma2_1, GridFamily::Lemma2_2, GridFamily::Thm2_3,
                         GridFamily::Proof2_7})
        CHECK(grid_family_from_name(grid_family_name(f)) == f);
    CHECK_FALSE(grid_family_from_name("bogus").has_value());

    GridOptions opts;
    opts.n_lo = 2;
    opts.n_hi = 5;
    opts.d_set = {3};
    auto verdicts = run_grid(GridFamily::Thm1_1, opts);
    REQUIRE(verdicts.size() == 3); // n = 2, 4, 5 (gcd(3,3) != 1)
    for (const auto& v : verdicts) CHECK(v.holds);
    // deterministic ordering regardless of worker count
    GridOptions par = opts;
    par.jobs = 3;
    auto verdicts2 = run_grid(GridFamily::Thm1_1, par);
    REQUIRE(verdicts2.size() == verdicts.size());
    for (size_t i = 0; i < verdicts.size(); ++i) CHECK(verdicts[i].id == verdicts2[i].id);
}

TEST_CASE("mutated grids go FALSE") {
    GridOptions opts;
    opts.n_lo = 5;
    opts.n_hi = 5;
    opts.d_set = {3};
    opts.mutation = Mutation::BumpQExponent;
    auto verdicts = run_grid(GridFamily::Thm1_1, opts);
    bool any_false = false;
    for (const auto& v : verdicts) any_false = any_false || !v.holds;
    CHECK(any_false);

    GridOptions inflate;
    inflate.n_lo = 4;
    inflate.n_hi = 4;
    inflate.d_set = {3};
    inflate.mutation = Mutation::InflateModulus;
    auto iv = run_grid(GridFamily::Thm1_1, inflate);
    bool any_false2 = false;
    for (const auto& v : iv) any_false2 = any_false2 || !v.holds;
    CHECK(any_false2);
}
