#include "taut/calculus.hpp"
#include "taut/semantics.hpp"
#include "taut/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using taut::AxiomA;
using taut::Assoc;
using taut::DeMorgan;
using taut::DisjunctList;
using taut::DNeg;
using taut::FaultKind;
using taut::Formula;
using taut::Perm;
using taut::Proof;
using taut::ProofStep;

namespace {

Formula F(const char* text) { return taut::parse(text); }

/// Premise lookup over a plain list of already-derived formulas.
taut::PremiseLookup lines(std::vector<Formula> formulas) {
    return [fs = std::move(formulas)](std::size_t index) { return fs.at(index - 1); };
}

const taut::PremiseLookup no_premises = lines({});

/// The worked three-step derivation of !(L|M)|M|L:
///   1  (L|M)|!(L|M)   axiom on L|M
///   2  !(L|M)|L|M     swap the two disjuncts of step 1
///   3  !(L|M)|M|L     swap the trailing L and M of step 2
Proof worked_derivation() {
    Proof p;
    p.steps.push_back({F("(L|M)|!(L|M)"), AxiomA{F("L|M"), {}}});
    p.steps.push_back({F("!(L|M)|L|M"),
                       Perm{{F("L|M"), F("!(L|M)")}, {2, 1}, 1}});
    p.steps.push_back({F("!(L|M)|M|L"),
                       Perm{{F("!(L|M)"), F("L"), F("M")}, {1, 3, 2}, 2}});
    return p;
}

}  // namespace

TEST_CASE("axiom instances conclude a|!a|rest") {
    CHECK(taut::conclusion_of(AxiomA{F("L|M"), {}}, no_premises) == F("(L|M)|!(L|M)"));
    CHECK(taut::conclusion_of(AxiomA{F("L"), {F("M"), F("N")}}, no_premises) ==
          F("L|!L|M|N"));
    CHECK(taut::conclusion_of(AxiomA{F("!L"), {}}, no_premises) == F("!L|!!L"));
}

TEST_CASE("permutations reorder the disjunct list") {
    SECTION("the two swaps of the worked derivation") {
        CHECK(taut::conclusion_of(Perm{{F("L|M"), F("!(L|M)")}, {2, 1}, 1},
                                  lines({F("(L|M)|!(L|M)")})) == F("!(L|M)|L|M"));
        CHECK(taut::conclusion_of(Perm{{F("!(L|M)"), F("L"), F("M")}, {1, 3, 2}, 1},
                                  lines({F("!(L|M)|L|M")})) == F("!(L|M)|M|L"));
    }
    SECTION("the identity permutation restates its premise") {
        CHECK(taut::conclusion_of(Perm{{F("L"), F("M")}, {1, 2}, 1}, lines({F("L|M")})) ==
              F("L|M"));
    }
    SECTION("duplicate list entries are reordered positionally") {
        CHECK(taut::conclusion_of(Perm{{F("L"), F("L"), F("M")}, {3, 1, 2}, 1},
                                  lines({F("L|L|M")})) == F("M|L|L"));
    }
}

TEST_CASE("sigma must be a bijection on 1..n") {
    const DisjunctList two{F("L"), F("M")};
    auto premise = lines({F("L|M")});
    CHECK_THROWS_AS(taut::conclusion_of(Perm{two, {1, 1}, 1}, premise), taut::BadPermutation);
    CHECK_THROWS_AS(taut::conclusion_of(Perm{two, {1}, 1}, premise), taut::BadPermutation);
    CHECK_THROWS_AS(taut::conclusion_of(Perm{two, {1, 2, 2}, 1}, premise),
                    taut::BadPermutation);
    CHECK_THROWS_AS(taut::conclusion_of(Perm{two, {0, 1}, 1}, premise), taut::BadPermutation);
    CHECK_THROWS_AS(taut::conclusion_of(Perm{two, {1, 3}, 1}, premise), taut::BadPermutation);
    CHECK_THROWS_AS(taut::conclusion_of(Perm{{}, {}, 1}, premise), taut::BadPermutation);
}

TEST_CASE("premises must match the instantiation exactly") {
    try {
        taut::conclusion_of(Perm{{F("L"), F("M")}, {2, 1}, 1}, lines({F("M|L")}));
        FAIL("expected PremiseMismatch");
    } catch (const taut::PremiseMismatch& e) {
        CHECK(e.which() == 1);
        CHECK(e.expected() == F("L|M"));
        CHECK(e.found() == F("M|L"));
    }
    // association matters: (L|M)|N is not the premise L|(M|N)
    CHECK_THROWS_AS(
        taut::conclusion_of(Perm{{F("L"), F("M"), F("N")}, {1, 2, 3}, 1},
                            lines({F("(L|M)|N")})),
        taut::PremiseMismatch);
}

TEST_CASE("association regroups the head of the spine") {
    CHECK(taut::conclusion_of(Assoc{F("L"), F("M"), {F("N")}, 1}, lines({F("L|M|N")})) ==
          F("(L|M)|N"));
    SECTION("empty rest degenerates to restating the premise") {
        CHECK(taut::conclusion_of(Assoc{F("L"), F("!L"), {}, 1}, lines({F("L|!L")})) ==
              F("L|!L"));
    }
    SECTION("the premise must carry the right-nested shape") {
        CHECK_THROWS_AS(
            taut::conclusion_of(Assoc{F("L"), F("M"), {F("N")}, 1}, lines({F("(L|M)|N")})),
            taut::PremiseMismatch);
    }
}

TEST_CASE("double negation wraps the first disjunct") {
    CHECK(taut::conclusion_of(DNeg{F("L"), {F("M")}, 1}, lines({F("L|M")})) == F("!!L|M"));
    CHECK(taut::conclusion_of(DNeg{F("L|M"), {}, 1}, lines({F("L|M")})) == F("!!(L|M)"));
    CHECK_THROWS_AS(taut::conclusion_of(DNeg{F("L"), {F("M")}, 1}, lines({F("M|L")})),
                    taut::PremiseMismatch);
}

TEST_CASE("de morgan combines two premises") {
    CHECK(taut::conclusion_of(DeMorgan{F("L"), F("M"), {F("N")}, 1, 2},
                              lines({F("!L|N"), F("!M|N")})) == F("!(L|M)|N"));
    SECTION("each premise is checked separately") {
        try {
            taut::conclusion_of(DeMorgan{F("L"), F("M"), {F("N")}, 1, 2},
                                lines({F("!L|N"), F("!M|M")}));
            FAIL("expected PremiseMismatch");
        } catch (const taut::PremiseMismatch& e) {
            CHECK(e.which() == 2);
            CHECK(e.expected() == F("!M|N"));
        }
        try {
            taut::conclusion_of(DeMorgan{F("L"), F("M"), {}, 1, 2},
                                lines({F("L"), F("!M")}));
            FAIL("expected PremiseMismatch");
        } catch (const taut::PremiseMismatch& e) {
            CHECK(e.which() == 1);
            CHECK(e.expected() == F("!L"));
        }
    }
}

TEST_CASE("premise indices are listed in rule order") {
    CHECK(taut::premises_of(AxiomA{F("L"), {}}).empty());
    CHECK(taut::premises_of(Perm{{F("L")}, {1}, 4}) == std::vector<std::size_t>{4});
    CHECK(taut::premises_of(DeMorgan{F("L"), F("M"), {}, 7, 3}) ==
          std::vector<std::size_t>{7, 3});
}

TEST_CASE("the worked derivation verifies") {
    taut::VerificationResult result = taut::verify(worked_derivation());
    REQUIRE(result.ok());
    CHECK(result.errors.empty());
    CHECK(result.verified->proved_formula() == F("!(L|M)|M|L"));
    CHECK(result.verified->proof().steps.size() == 3);
}

TEST_CASE("a lone axiom step proves excluded middle") {
    Proof p;
    p.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});
    taut::VerificationResult result = taut::verify(p);
    REQUIRE(result.ok());
    CHECK(result.verified->proved_formula() == F("L|!L"));
}

TEST_CASE("every prefix of a verified proof verifies") {
    Proof whole = worked_derivation();
    for (std::size_t n = 1; n <= whole.steps.size(); ++n) {
        Proof prefix{std::vector<ProofStep>(whole.steps.begin(), whole.steps.begin() + n)};
        CHECK(taut::verify(prefix).ok());
    }
}

TEST_CASE("every line of a verified proof is a tautology") {
    for (const ProofStep& step : worked_derivation().steps)
        CHECK(taut::is_true(step.formula).is_tautology());
}

TEST_CASE("duplicate and unused lines are legal") {
    Proof p;
    p.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});
    p.steps.push_back({F("M|!M|Z"), AxiomA{F("M"), {F("Z")}}});  // never used
    p.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});          // duplicate line
    p.steps.push_back({F("!L|L"), Perm{{F("L"), F("!L")}, {2, 1}, 1}});
    CHECK(taut::verify(p).ok());
}

TEST_CASE("tampered sigma is reported as a conclusion mismatch") {
    Proof p = worked_derivation();
    std::get<Perm>(p.steps[1].justification).sigma = {1, 2};
    taut::VerificationResult result = taut::verify(p);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].step == 2);
    CHECK(result.errors[0].kind == FaultKind::ConclusionMismatch);
    CHECK(taut::to_string(result.errors[0]).starts_with("step 2:"));
}

TEST_CASE("forward and self references are rejected") {
    Proof p;
    p.steps.push_back({F("!L|L"), Perm{{F("L"), F("!L")}, {2, 1}, 1}});  // cites itself
    p.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});
    taut::VerificationResult result = taut::verify(p);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].step == 1);
    CHECK(result.errors[0].kind == FaultKind::ForwardReference);

    Proof q;
    q.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});
    q.steps.push_back({F("!L|L"), Perm{{F("L"), F("!L")}, {2, 1}, 5}});  // cites ahead
    taut::VerificationResult r2 = taut::verify(q);
    REQUIRE_FALSE(r2.ok());
    CHECK(r2.errors[0].step == 2);
    CHECK(r2.errors[0].kind == FaultKind::ForwardReference);
}

TEST_CASE("verification collects every fault, not just the first") {
    Proof p;
    p.steps.push_back({F("L|!L"), AxiomA{F("L"), {}}});
    p.steps.push_back({F("M|L|!L"), Perm{{F("L"), F("!L")}, {2, 1}, 1}});         // wrong stated formula
    p.steps.push_back({F("!L|L"), Perm{{F("L"), F("!L")}, {1, 1}, 1}});           // bad sigma
    p.steps.push_back({F("!!L|!L"), DNeg{F("L"), {F("!L")}, 2}});                 // premise does not match
    taut::VerificationResult result = taut::verify(p);
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.errors.size() == 3);
    CHECK(result.errors[0].step == 2);
    CHECK(result.errors[0].kind == FaultKind::ConclusionMismatch);
    CHECK(result.errors[1].step == 3);
    CHECK(result.errors[1].kind == FaultKind::BadPermutation);
    CHECK(result.errors[2].step == 4);
    CHECK(result.errors[2].kind == FaultKind::PremiseMismatch);
}

TEST_CASE("empty proofs do not verify") {
    taut::VerificationResult result = taut::verify(Proof{});
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.errors.size() == 1);
    CHECK(result.errors[0].kind == FaultKind::EmptyProof);
    CHECK(result.errors[0].step == 0);
    CHECK(taut::to_string(result.errors[0]) == "proof has no steps");
}

TEST_CASE("rule instances preserve truth on every assignment") {
    // spot instances of each schema, checked on all four L/M rows
    auto all_rows_equal = [](const Formula& a, const Formula& b) {
        taut::TruthTable ta = taut::truth_table(Formula::disjunction(a, b));
        for (std::size_t row = 0; row < ta.rows(); ++row) {
            taut::Assignment s = ta.assignment(row);
            if (taut::eval(a, s) != taut::eval(b, s)) return false;
        }
        return true;
    };
    CHECK(all_rows_equal(F("L|M"), taut::conclusion_of(Perm{{F("L"), F("M")}, {2, 1}, 1},
                                                       lines({F("L|M")}))));
    CHECK(all_rows_equal(F("L|M|M"), taut::conclusion_of(Assoc{F("L"), F("M"), {F("M")}, 1},
                                                         lines({F("L|M|M")}))));
    CHECK(all_rows_equal(F("L|M"), taut::conclusion_of(DNeg{F("L"), {F("M")}, 1},
                                                       lines({F("L|M")}))));
}
