#include <doctest.h>

#include "wittlab/axioms.hpp"
#include "wittlab/sampling.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;

namespace {

AxiomSuiteConfig config(const std::string& ring, std::uint32_t m, std::uint32_t r_max, std::uint32_t samples,
                        std::uint64_t seed)
{
    return AxiomSuiteConfig{Ring::parse(ring), m, r_max, samples, seed};
}

void check_all_pass(const AxiomReport& rep)
{
    for (const auto& [name, t] : rep.axioms) {
        CAPTURE(name);
        CHECK(t.failed == 0);
        CHECK(t.inconsistent == 0);
        CHECK(!t.counterexample);
        CHECK(t.passed + t.skipped == rep.config.samples);
    }
    CHECK(rep.all_passed());
}

} // namespace

TEST_CASE("axiom suite over F_7 in both models")
{
    const auto cfg = config("fp:7", 6, 4, 200, 42);
    for (auto model : {AxiomModel::Witt, AxiomModel::Cycles}) {
        CAPTURE(to_string(model));
        const auto rep = run_axiom_suite(cfg, model);
        check_all_pass(rep);
        CHECK(rep.axioms.size() == 10);
        for (const auto& [name, t] : rep.axioms) {
            CAPTURE(name);
            CHECK(t.passed > 0);
        }
        const auto j = rep.to_json();
        CHECK(j["suite"] == to_string(model));
        CHECK(j["out_of_scope"]["iv"]["status"] == "logged, not asserted");
        CHECK(j["all_passed"] == true);
    }
}

TEST_CASE("axiom suite over Z and F_5[x]")
{
    for (const auto* ring : {"Z", "fp:5[x]"}) {
        CAPTURE(ring);
        check_all_pass(run_axiom_suite(config(ring, 8, 4, 40, 3), AxiomModel::Witt));
        check_all_pass(run_axiom_suite(config(ring, 8, 4, 40, 3), AxiomModel::Cycles));
    }
}

TEST_CASE("reports are reproducible and depend on the seed")
{
    const auto a = run_axiom_suite(config("fp:5", 6, 3, 30, 9), AxiomModel::Cycles).to_json().dump();
    const auto b = run_axiom_suite(config("fp:5", 6, 3, 30, 9), AxiomModel::Cycles).to_json().dump();
    CHECK(a == b);
    const auto iv1 = run_axiom_suite(config("Z", 6, 3, 1, 1), AxiomModel::Witt).out_of_scope.dump();
    const auto iv2 = run_axiom_suite(config("Z", 6, 3, 1, 2), AxiomModel::Witt).out_of_scope.dump();
    CHECK(iv1 != iv2);
}

TEST_CASE("r = 1 collapses to the identity operators")
{
    const auto rep = run_axiom_suite(config("Z", 5, 1, 50, 5), AxiomModel::Cycles);
    check_all_pass(rep);
    // F_1 F_1 = F_1 needs modulus 2(k+1)/2 - 1 >= 1: always feasible.
    CHECK(rep.axioms.at("i_F_r_F_s_eq_F_rs").skipped == 0);

    Sampler s(1);
    const auto x = s.witt(TruncationSet::full(5), Ring::integers());
    CHECK(witt::frobenius(1, x) == x);
    CHECK(witt::verschiebung(1, x) == x);
}

TEST_CASE("F_2 V_2 x = x + x")
{
    Sampler s(77);
    for (int i = 0; i < 50; ++i) {
        const auto x = s.witt(TruncationSet::full(static_cast<std::uint32_t>(s.uniform(1, 6))), Ring::parse("fp:7"));
        CHECK(witt::frobenius(2, witt::verschiebung(2, x)) == witt::add(x, x));
    }
}

TEST_CASE("model and ring combinations")
{
    CHECK_THROWS_AS(run_axiom_suite(config("Z/6", 4, 2, 5, 1), AxiomModel::Cycles), PreconditionError);
    const auto rep = run_axiom_suite(config("Z/6", 4, 2, 20, 1), AxiomModel::Witt);
    check_all_pass(rep);
    CHECK(rep.axioms.at("lambda_tau_commutes_with_ring_ops_F_V_R").skipped == 20);
    CHECK_THROWS_AS(run_axiom_suite(config("Z", 0, 2, 5, 1), AxiomModel::Witt), PreconditionError);
    CHECK_THROWS_AS(run_axiom_suite(config("Z", 3, 0, 5, 1), AxiomModel::Witt), PreconditionError);
    CHECK(axiom_model_from_string("cycles") == AxiomModel::Cycles);
    CHECK_THROWS_AS(axiom_model_from_string("chow"), SchemaError);
}

TEST_CASE("ghost oracle suite")
{
    for (const auto* ring : {"Z", "Z[x]", "Z/4", "fp:3"}) {
        CAPTURE(ring);
        const auto rep = ghost_oracle_suite(config(ring, 12, 4, 60, 8));
        check_all_pass(rep);
        CHECK(rep.axioms.size() == 5);
        CHECK(rep.axioms.at("ghost_of_F_r_is_index_dilation").passed == 60);
    }
}
