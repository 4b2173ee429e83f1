// ============================================================================
// taut/calculus.hpp - one-sided disjunction calculus and proof checking
// ============================================================================
//
// Five schemas, each represented by a fully instantiated justification.
// Premise fields hold 1-based indices of earlier proof steps.  Writing
// rest for a possibly empty disjunct list joined to the right:
//
//   AxiomA    ⊢ a | !a | rest
//   Perm      join(list)            ⊢ join(list[σ(1)], …, list[σ(n)])
//   Assoc     a | (b | rest)        ⊢ (a|b) | rest
//   DNeg      a | rest              ⊢ !!a | rest
//   DeMorgan  !a | rest, !b | rest  ⊢ !(a|b) | rest
//
// A justification names its premises only by index; conclusion_of computes
// what the rule instance proves once the premise formulas are supplied.
// verify() checks a whole proof and collects every fault instead of
// stopping at the first.
// ============================================================================

#pragma once

#include "taut/formula.hpp"
#include "taut/text.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taut {

// ── Justifications ──────────────────────────────────────────────────────────

struct AxiomA {
    Formula a;
    DisjunctList rest;

    bool operator==(const AxiomA&) const = default;
};

struct Perm {
    DisjunctList list;
    std::vector<std::size_t> sigma;  // σ(1)…σ(n), each value 1-based
    std::size_t premise;

    bool operator==(const Perm&) const = default;
};

struct Assoc {
    Formula a;
    Formula b;
    DisjunctList rest;
    std::size_t premise;

    bool operator==(const Assoc&) const = default;
};

struct DNeg {
    Formula a;
    DisjunctList rest;
    std::size_t premise;

    bool operator==(const DNeg&) const = default;
};

struct DeMorgan {
    Formula a;
    Formula b;
    DisjunctList rest;
    std::size_t premise_left;   // proves !a | rest
    std::size_t premise_right;  // proves !b | rest

    bool operator==(const DeMorgan&) const = default;
};

using Justification = std::variant<AxiomA, Perm, Assoc, DNeg, DeMorgan>;

struct ProofStep {
    Formula formula;
    Justification justification;

    bool operator==(const ProofStep&) const = default;
};

/// Step i of the proof is steps[i - 1]; premises refer to steps by that
/// 1-based numbering.
struct Proof {
    std::vector<ProofStep> steps;

    bool operator==(const Proof&) const = default;
};

// ── Errors ──────────────────────────────────────────────────────────────────

class BadPermutation : public Error {
public:
    explicit BadPermutation(const std::string& message)
        : Error("bad permutation: " + message) {}
};

class PremiseMismatch : public Error {
public:
    PremiseMismatch(std::size_t which, Formula expected, Formula found)
        : Error("premise " + std::to_string(which) + " is " + render(found) +
                " but the rule instance requires " + render(expected)),
          which_(which), expected_(std::move(expected)), found_(std::move(found)) {}

    /// Ordinal of the offending premise within the justification (1 or 2).
    std::size_t which() const noexcept { return which_; }
    const Formula& expected() const noexcept { return expected_; }
    const Formula& found() const noexcept { return found_; }

private:
    std::size_t which_;
    Formula expected_;
    Formula found_;
};

// ── Rule application ────────────────────────────────────────────────────────

/// Maps a 1-based premise index to the formula that step states.
using PremiseLookup = std::function<Formula(std::size_t)>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline DisjunctList prepend(std::initializer_list<Formula> head, const DisjunctList& rest) {
    DisjunctList out(head);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

inline void require_premise(std::size_t which, const Formula& expected, const Formula& found) {
    if (!(expected == found)) throw PremiseMismatch(which, expected, found);
}

inline void require_bijection(const std::vector<std::size_t>& sigma, std::size_t n) {
    if (n == 0) throw BadPermutation("the disjunct list is empty");
    if (sigma.size() != n)
        throw BadPermutation("sigma has " + std::to_string(sigma.size()) +
                             " entries for a list of " + std::to_string(n));
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v < 1 || v > n)
            throw BadPermutation("sigma value " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(n));
        if (seen[v - 1]) throw BadPermutation("sigma repeats " + std::to_string(v));
        seen[v - 1] = true;
    }
}

}  // namespace detail

/// Premise indices named by a justification, in rule order.
inline std::vector<std::size_t> premises_of(const Justification& j) {
    return std::visit(
        detail::overloaded{
            [](const AxiomA&) { return std::vector<std::size_t>{}; },
            [](const Perm& r) { return std::vector<std::size_t>{r.premise}; },
            [](const Assoc& r) { return std::vector<std::size_t>{r.premise}; },
            [](const DNeg& r) { return std::vector<std::size_t>{r.premise}; },
            [](const DeMorgan& r) {
                return std::vector<std::size_t>{r.premise_left, r.premise_right};
            },
        },
        j);
}

/// The formula this rule instance concludes.  Premise formulas are pulled
/// through `lookup` and must match the instantiation exactly; throws
/// PremiseMismatch otherwise, BadPermutation for a sigma that is no
/// bijection.
inline Formula conclusion_of(const Justification& j, const PremiseLookup& lookup) {
    using detail::prepend;
    return std::visit(
        detail::overloaded{
            [&](const AxiomA& r) {
                return join(prepend({r.a, Formula::negation(r.a)}, r.rest));
            },
            [&](const Perm& r) {
                detail::require_bijection(r.sigma, r.list.size());
                detail::require_premise(1, join(r.list), lookup(r.premise));
                DisjunctList out;
                out.reserve(r.list.size());
                for (std::size_t v : r.sigma) out.push_back(r.list[v - 1]);
                return join(out);
            },
            [&](const Assoc& r) {
                Formula expected = Formula::disjunction(r.a, join(prepend({r.b}, r.rest)));
                detail::require_premise(1, expected, lookup(r.premise));
                return join(prepend({Formula::disjunction(r.a, r.b)}, r.rest));
            },
            [&](const DNeg& r) {
                detail::require_premise(1, join(prepend({r.a}, r.rest)), lookup(r.premise));
                return join(prepend({Formula::negation(Formula::negation(r.a))}, r.rest));
            },
            [&](const DeMorgan& r) {
                detail::require_premise(1, join(prepend({Formula::negation(r.a)}, r.rest)),
                                        lookup(r.premise_left));
                detail::require_premise(2, join(prepend({Formula::negation(r.b)}, r.rest)),
                                        lookup(r.premise_right));
                return join(prepend(
                    {Formula::negation(Formula::disjunction(r.a, r.b))}, r.rest));
            },
        },
        j);
}

// ── Verification ────────────────────────────────────────────────────────────

enum class FaultKind {
    EmptyProof,
    ForwardReference,    // premise index is zero, or not strictly earlier
    BadPermutation,
    PremiseMismatch,
    ConclusionMismatch,  // stated formula differs from what the rule yields
};

struct StepError {
    std::size_t step;  // 1-based; 0 for proof-level faults
    FaultKind kind;
    std::string message;
};

inline std::string to_string(const StepError& e) {
    if (e.step == 0) return e.message;
    return "step " + std::to_string(e.step) + ": " + e.message;
}

/// A proof that passed verification.  Instances exist only as outputs of
/// verify(), so holding one certifies every step.
class VerifiedProof {
public:
    const Proof& proof() const noexcept { return proof_; }

    /// The final line, i.e. what the whole proof establishes.
    const Formula& proved_formula() const noexcept { return proof_.steps.back().formula; }

private:
    friend struct VerificationResult;

    explicit VerifiedProof(Proof proof) : proof_(std::move(proof)) {}

    Proof proof_;
};

struct VerificationResult {
    std::optional<VerifiedProof> verified;  // engaged exactly when errors is empty
    std::vector<StepError> errors;

    bool ok() const noexcept { return verified.has_value(); }

    static VerificationResult success(Proof proof) {
        return VerificationResult{VerifiedProof(std::move(proof)), {}};
    }
    static VerificationResult failure(std::vector<StepError> errors) {
        return VerificationResult{std::nullopt, std::move(errors)};
    }
};

/// Checks every step and reports all faults.  A step whose premises refer
/// forward (or to itself) is reported once and not otherwise checked.
inline VerificationResult verify(const Proof& proof) {
    std::vector<StepError> errors;
    if (proof.steps.empty()) {
        errors.push_back({0, FaultKind::EmptyProof, "proof has no steps"});
        return VerificationResult::failure(std::move(errors));
    }
    for (std::size_t i = 1; i <= proof.steps.size(); ++i) {
        const ProofStep& step = proof.steps[i - 1];
        bool premises_ok = true;
        for (std::size_t p : premises_of(step.justification)) {
            if (p < 1 || p >= i) {
                errors.push_back({i, FaultKind::ForwardReference,
                                  "premise " + std::to_string(p) +
                                      " does not refer to an earlier step"});
                premises_ok = false;
            }
        }
        if (!premises_ok) continue;
        try {
            Formula concluded = conclusion_of(
                step.justification, [&](std::size_t p) { return proof.steps[p - 1].formula; });
            if (!(concluded == step.formula))
                errors.push_back({i, FaultKind::ConclusionMismatch,
                                  "states " + render(step.formula) +
                                      " but the rule instance yields " + render(concluded)});
        } catch (const BadPermutation& e) {
            errors.push_back({i, FaultKind::BadPermutation, e.what()});
        } catch (const PremiseMismatch& e) {
            errors.push_back({i, FaultKind::PremiseMismatch, e.what()});
        }
    }
    if (!errors.empty()) return VerificationResult::failure(std::move(errors));
    return VerificationResult::success(proof);
}

}  // namespace taut
