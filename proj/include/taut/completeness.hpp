// ============================================================================
// taut/completeness.hpp - proof synthesis for tautologies
// ============================================================================
//
// prove_goal treats a goal as a disjunct list and recurses on its measure,
// the summed score of the items (disjunctions, plus negations not guarding
// a letter).
//
// Measure zero means every item is a literal.  If a complementary pair
// L, !L occurs, the goal is an axiom instance up to reordering; otherwise
// falsifying every literal falsifies the whole goal.
//
// Otherwise the first item with positive score is brought to the front
// and decomposed by one rule, recursing into subgoals of strictly smaller
// measure:
//
//   b|c     front the pieces:         [b, c, rest]            close with Assoc
//   !!b     strip the negations:      [b, rest]               close with DNeg
//   !(b|c)  split the negation:       [!b, rest], [!c, rest]  close with DeMorgan
//
// Each decomposition appends its closing step for the fronted goal, then
// one Perm restoring the original item order (skipped when already in
// order).  A falsifying assignment found in any subgoal falsifies the
// parent goal as well once the parent's remaining letters are pinned to
// F, so refutation propagates without backtracking.
//
// All recursions share one growing step list; a subproof's conclusion is
// addressed by the step index it returns, which keeps premise indices
// stable and the final list a single valid proof.
// ============================================================================

#pragma once

#include "taut/calculus.hpp"
#include "taut/semantics.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <variant>
#include <vector>

namespace taut {

/// A disjunct list to derive; prove_goal proves or refutes join(items).
struct Goal {
    DisjunctList items;

    bool operator==(const Goal&) const = default;
};

/// Summed score of the goal items.  The synthesis recursion strictly
/// decreases this measure.
inline std::size_t measure(const Goal& g) {
    std::size_t total = 0;
    for (const Formula& f : g.items) total += score(f);
    return total;
}

/// Called before each recursive descent with the measures of the current
/// goal and of the subgoal about to be entered.
using RecursionObserver = std::function<void(std::size_t parent, std::size_t child)>;

class SynthesisResult {
public:
    static SynthesisResult proved(Proof proof) { return SynthesisResult(std::move(proof)); }
    static SynthesisResult refuted(Assignment witness) {
        return SynthesisResult(std::move(witness));
    }

    bool is_proved() const noexcept { return std::holds_alternative<Proof>(value_); }

    const Proof& proof() const {
        if (!is_proved()) throw Error("refuted result carries no proof");
        return std::get<Proof>(value_);
    }

    /// A falsifying assignment covering the goal's letters.
    const Assignment& witness() const {
        if (is_proved()) throw Error("proved result carries no witness");
        return std::get<Assignment>(value_);
    }

private:
    explicit SynthesisResult(std::variant<Proof, Assignment> value)
        : value_(std::move(value)) {}

    std::variant<Proof, Assignment> value_;
};

namespace detail {

class Synthesizer {
public:
    explicit Synthesizer(const RecursionObserver& observer) : observer_(observer) {}

    std::vector<ProofStep>& steps() noexcept { return steps_; }

    /// Appends steps deriving join(items) and returns the index of the
    /// final one, or a falsifying assignment over the items' letters.
    std::variant<std::size_t, Assignment> run(const DisjunctList& items) {
        std::size_t m = measure(Goal{items});
        if (m == 0) return literals_case(items);

        // Lowest-index item that still has connectives to unfold.
        std::size_t target = 0;
        while (score(items[target]) == 0) ++target;
        auto outcome = decompose(items, target, m);
        if (auto* witness = std::get_if<Assignment>(&outcome))
            return falsify_remaining(std::move(*witness), items);

        std::size_t closing = std::get<std::size_t>(outcome);
        if (target == 0) return closing;  // already in goal order
        return append(join(items),
                      Perm{prepend({items[target]}, erased(items, target)),
                           unfront_sigma(items.size(), target), closing});
    }

private:
    // Goal of literals: close with an axiom on a complementary pair, or
    // read off the falsifying assignment.
    std::variant<std::size_t, Assignment> literals_case(const DisjunctList& items) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!items[i].is_atom()) continue;
            for (std::size_t j = 0; j < items.size(); ++j) {
                if (items[j] == Formula::negation(items[i]))
                    return axiom_on_pair(items, i, j);
            }
        }
        Assignment witness;
        for (const Formula& item : items) {
            if (item.is_atom())
                witness.set(item.letter(), TruthValue::F);
            else
                witness.set(item.inner().letter(), TruthValue::V);
        }
        return witness;
    }

    std::size_t axiom_on_pair(const DisjunctList& items, std::size_t i, std::size_t j) {
        DisjunctList list{items[i], items[j]};
        for (std::size_t k = 0; k < items.size(); ++k)
            if (k != i && k != j) list.push_back(items[k]);
        std::size_t axiom = append(
            join(list), AxiomA{items[i], DisjunctList(list.begin() + 2, list.end())});
        if (list == items) return axiom;

        // σ sends each original position to its slot in the axiom order.
        std::vector<std::size_t> sigma(items.size());
        std::size_t next = 2;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k == i)
                sigma[k] = 1;
            else if (k == j)
                sigma[k] = 2;
            else
                sigma[k] = ++next;
        }
        return append(join(items), Perm{std::move(list), std::move(sigma), axiom});
    }

    // Unfolds items[target] at the front of the goal and returns the index
    // of the step stating join([items[target]] ++ rest).
    std::variant<std::size_t, Assignment> decompose(const DisjunctList& items,
                                                    std::size_t target, std::size_t m) {
        const Formula& f = items[target];
        DisjunctList rest = erased(items, target);

        Formula fronted = join(prepend({f}, rest));

        if (f.is_or()) {
            auto sub = recurse(m, prepend({f.left(), f.right()}, rest));
            if (auto* witness = std::get_if<Assignment>(&sub)) return std::move(*witness);
            return append(std::move(fronted),
                          Assoc{f.left(), f.right(), std::move(rest),
                                std::get<std::size_t>(sub)});
        }

        Formula inner = f.inner();  // score > 0 rules out a bare letter
        if (inner.is_not()) {
            auto sub = recurse(m, prepend({inner.inner()}, rest));
            if (auto* witness = std::get_if<Assignment>(&sub)) return std::move(*witness);
            return append(std::move(fronted),
                          DNeg{inner.inner(), std::move(rest), std::get<std::size_t>(sub)});
        }

        auto left = recurse(m, prepend({Formula::negation(inner.left())}, rest));
        if (auto* witness = std::get_if<Assignment>(&left)) return std::move(*witness);
        auto right = recurse(m, prepend({Formula::negation(inner.right())}, rest));
        if (auto* witness = std::get_if<Assignment>(&right)) return std::move(*witness);
        return append(std::move(fronted),
                      DeMorgan{inner.left(), inner.right(), std::move(rest),
                               std::get<std::size_t>(left), std::get<std::size_t>(right)});
    }

    std::variant<std::size_t, Assignment> recurse(std::size_t parent_measure,
                                                  const DisjunctList& subgoal) {
        if (observer_) observer_(parent_measure, measure(Goal{subgoal}));
        return run(subgoal);
    }

    std::size_t append(Formula formula, Justification justification) {
        steps_.push_back(ProofStep{std::move(formula), std::move(justification)});
        return steps_.size();
    }

    // A subgoal's witness never mentions letters the subgoal dropped;
    // pinning those to F keeps every remaining goal item false.
    Assignment falsify_remaining(Assignment witness, const DisjunctList& items) {
        for (const Formula& item : items)
            for (const Letter& letter : letters(item))
                if (!witness.contains(letter)) witness.set(letter, TruthValue::F);
        return witness;
    }

    static DisjunctList erased(const DisjunctList& items, std::size_t index) {
        DisjunctList out;
        out.reserve(items.size() - 1);
        for (std::size_t k = 0; k < items.size(); ++k)
            if (k != index) out.push_back(items[k]);
        return out;
    }

    // σ undoing the move of items[target] to the front.
    static std::vector<std::size_t> unfront_sigma(std::size_t n, std::size_t target) {
        std::vector<std::size_t> sigma(n);
        for (std::size_t k = 0; k < n; ++k)
            sigma[k] = (k == target) ? 1 : (k < target ? k + 2 : k + 1);
        return sigma;
    }

    std::vector<ProofStep> steps_;
    const RecursionObserver& observer_;
};

}  // namespace detail

/// Derives join(g.items) or refutes it with a falsifying assignment.
/// Throws EmptyDisjunction on an empty goal.
inline SynthesisResult prove_goal(const Goal& g, const RecursionObserver& observer = {}) {
    if (g.items.empty()) throw EmptyDisjunction();
    detail::Synthesizer synth(observer);
    auto outcome = synth.run(g.items);
    if (auto* witness = std::get_if<Assignment>(&outcome))
        return SynthesisResult::refuted(std::move(*witness));
    return SynthesisResult::proved(Proof{std::move(synth.steps())});
}

/// Proves f outright or refutes it.  The tautology check runs first, so a
/// refutation always reports the first falsifying assignment in canonical
/// row order; on success the proof's final line is exactly f.
inline SynthesisResult prove(const Formula& f, const RecursionObserver& observer = {}) {
    Verdict verdict = is_true(f);
    if (!verdict.is_tautology()) return SynthesisResult::refuted(verdict.witness());
    SynthesisResult result = prove_goal(Goal{DisjunctList{f}}, observer);
    if (!result.is_proved()) throw Error("internal error: a tautology failed to synthesize");
    return result;
}

}  // namespace taut
