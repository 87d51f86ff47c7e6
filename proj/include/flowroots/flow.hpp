#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <list>
#include <string>
#include <unordered_map>
#include <utility>

#include "flowroots/multigraph.hpp"
#include "flowroots/polynomial.hpp"
#include "flowroots/structure.hpp"

namespace flowroots {

// How often each reduction rule fired during one computation.
struct ReductionCounters {
    long loop = 0;
    long bridge = 0;
    long block_factor = 0;
    long separable_minus_e = 0;
    long two_cut = 0;
    long three_cut = 0;
    long delete_contract = 0;

    bool operator==(const ReductionCounters&) const = default;
};

struct FlowResult {
    IntPolynomial polynomial;
    // p(G) = |E| - |V| + b(G) - 1 (meaningful for connected inputs; the
    // formula is applied verbatim otherwise)
    int p_exponent = 0;
    ReductionCounters reductions_used;
    long cache_hits = 0;
};

struct EngineOptions {
    // With factorizations off the engine falls back to the plain
    // recurrence (empty / bridge / component product / loop /
    // delete-contract), the slow reference the shortcuts are tested
    // against.
    bool use_factorizations = true;
    // Max memo entries, least-recently-used eviction; 0 disables caching.
    std::size_t cache_limit = std::size_t(1) << 18;
};

// Exact flow polynomial computation.  The reduction pipeline tries, in
// order, first match wins:
//   empty edge set        -> 1
//   any bridge            -> 0
//   disconnected          -> product over components
//   loops                 -> (lambda-1)^l * F(G - loops)
//   separable             -> product over blocks
//   2-edge-cut            -> F(G1) F(G2) / (lambda-1), both sides with
//                            at least one edge, sides contracted away
//   separable G - e       -> F(H1 + v u1) F(H2 + v u2) / (lambda-1)
//   proper 3-edge-cut     -> F(G1) F(G2) / ((lambda-1)(lambda-2))
//   delete-contract       -> F(G/e) - F(G-e), e in a largest parallel
//                            class, smallest id
// Results are memoized by canonical code, so hits are topology-wide.
// An engine is cheap; use one per worker thread (the cache is not
// synchronized), results do not depend on how work was split.
class FlowEngine {
public:
    explicit FlowEngine(EngineOptions options = {});

    FlowResult flow_polynomial(const Multigraph& g);

    const EngineOptions& options() const { return options_; }

private:
    IntPolynomial compute(const Multigraph& g);
    IntPolynomial reduce(const Multigraph& g);
    const IntPolynomial* cache_find(const std::string& key);
    void cache_store(const std::string& key, const IntPolynomial& value);

    EngineOptions options_;
    ReductionCounters counters_;
    long cache_hits_ = 0;
    // most recently used at the front
    std::list<std::pair<std::string, IntPolynomial>> lru_;
    std::unordered_map<std::string,
                       std::list<std::pair<std::string, IntPolynomial>>::iterator>
        index_;
};

// Independent oracle: fixes an orientation, parametrizes the cycle space
// over Z_k by the chords of a spanning forest (dimension |E|-|V|+c) and
// counts the assignments under which no edge carries 0.  Equals the flow
// polynomial evaluated at k.  Throws BudgetError if k^dim > budget and
// DomainError for k < 2.
long flow_count(const Multigraph& g, int k, long budget = 100000000);

// Q(G, lambda) = (-1)^p(G) F(G, lambda), evaluated exactly.
struct QValue {
    int sign = 0; // -1, 0, +1
    mpq_class value;
    int p_exponent = 0;
};
// Pre: g connected.
QValue q_value(FlowEngine& engine, const Multigraph& g, const mpq_class& lambda);
QValue q_value(const Multigraph& g, const mpq_class& lambda);

// Sign/multiplicity facts every bridgeless connected graph must satisfy:
//  (a) sign of F is (-1)^(|E|-|V|+1) below 1  (checked at -2, -1, 0, 1/2),
//  (b) 1 is a root of multiplicity exactly b(G),
//  (c) sign of F is (-1)^(|E|-|V|+b(G)-1) on (1, 32/27]
//      (checked at 129/128, 33/32, 9/8, 32/27).
struct WakelinReport {
    bool sign_below_one = false;
    bool multiplicity_at_one = false;
    bool sign_above_one = false;
    int block_count = 0;
    int multiplicity_found = 0;

    bool passed() const {
        return sign_below_one && multiplicity_at_one && sign_above_one;
    }
};
// Pre: g connected and bridgeless (throws DomainError otherwise).
WakelinReport wakelin_audit(FlowEngine& engine, const Multigraph& g);
WakelinReport wakelin_audit(const Multigraph& g);

// Exact polynomial check of the two-block identity at a vertex split:
//   (lambda-1) F(G) = F(G1+uv) F(G2+uv) + (lambda-1) F(G1) F(G2).
// Pre: g nonseparable (throws DomainError otherwise; an invalid split
// fails inside split_side).
bool verify_two_block_identity(FlowEngine& engine, const Multigraph& g,
                               const VertexSplit& split);
bool verify_two_block_identity(const Multigraph& g, const VertexSplit& split);

} // namespace flowroots
