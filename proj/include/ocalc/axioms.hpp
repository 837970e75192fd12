#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ocalc/completion.hpp"
#include "ocalc/frobenius.hpp"
#include "ocalc/presentation.hpp"
#include "ocalc/surfaces.hpp"
#include "ocalc/term.hpp"

namespace ocalc {

/// Seeded random source of surfaces, nested surfaces and terms. Every label
/// it hands out is fresh, so independently sampled values are composable.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
    }
    std::mt19937_64& engine() { return rng_; }

    Label open_label() { return Label("p" + std::to_string(next_++)); }
    Label closed_label() { return Label("c" + std::to_string(next_++)); }

    /// At least `min_open` open and `min_closed` closed labels.
    Surface surface(int min_open = 0, int min_closed = 0);
    NestedSurface nested(int min_open = 0, int min_closed = 0);
    /// A well-formed term with `generators` generators.
    Term term(int generators);

private:
    Multicycle multicycle(int labels, int cycles);
    std::mt19937_64 rng_;
    std::uint64_t next_ = 0;
};

struct PropertyResult {
    PropertyResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

/// Modular-hybrid axioms on random instances: sequential and parallel
/// associativity, commutativity, contraction commutation, both interchange
/// laws, genus additivity and the +2 contraction shift, stability closure.
/// `iters` instances per law.
std::vector<PropertyResult> check_surface_axioms(std::uint64_t seed, std::size_t iters);
std::vector<PropertyResult> check_nested_axioms(std::uint64_t seed, std::size_t iters);

/// alpha∘beta = id on every enumerated surface with at most `max_open` open and
/// `max_closed` closed labels and genus at most `max_genus`.
PropertyResult check_alpha_beta(int max_open, int max_closed, int max_genus);

/// alpha commutes with open/closed composition and contraction.
PropertyResult check_alpha_morphism(std::uint64_t seed, std::size_t iters);

/// canon_mod is idempotent and op-then-canon equals canon-then-op-then-canon.
PropertyResult check_canon_congruence(std::uint64_t seed, std::size_t iters);

struct RewriteStats {
    PropertyResult result;
    std::map<Axiom, std::size_t> applied;
};

/// Random walks of axiom rewrites on random terms; every step must keep the
/// surface and the free labels. `steps` rewrites in total.
RewriteStats check_rewrite_soundness(std::uint64_t seed, std::size_t steps);

/// Every rewrite step must keep eval_term_end over `data`.
RewriteStats check_end_invariance(std::uint64_t seed, std::size_t steps, const OpenClosedData& data);

}  // namespace ocalc
