#pragma once

#include "fpcore/finite_potent.hpp"
#include "fpcore/random.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fpcore {

/// Pass/fail counts per named identity, in first-seen order.
class CatalogTally {
public:
    struct Entry {
        std::string name;
        std::size_t passed = 0;
        std::size_t failed = 0;
        /// For equivalences: samples on which both sides held.
        std::size_t positives = 0;
    };

    void record(const std::string& name, bool ok);
    /// Records the equivalence lhs ⟺ rhs.
    void record_equivalence(const std::string& name, bool lhs, bool rhs);
    void merge(const CatalogTally& other);

    const std::vector<Entry>& entries() const { return entries_; }
    const Entry* find(const std::string& name) const;
    bool all_passed() const;

private:
    Entry& slot(const std::string& name);

    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> lookup_;
};

/// Every single-operator identity applicable to op (structure, Drazin, Moore-
/// Penrose, and for index <= 1 the group and core inverse catalog).
void check_operator(const Operator& op, CatalogTally& tally, Rng& rng);

/// Core-order characterizations and what comparability implies for a pair.
void check_core_pair(const Operator& phi, const Operator& psi, CatalogTally& tally);

/// Transitivity and restriction agreement along φ ≤ ψ ≤ χ.
void check_core_chain(const Operator& phi, const Operator& psi, const Operator& chi,
                      CatalogTally& tally);

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::size_t dim = 5;
    /// Every `complex_every`-th sample is over Q(i); 0 disables.
    std::size_t complex_every = 4;
    /// Every `countable_every`-th sample lives on a countable ambient; 0 disables.
    std::size_t countable_every = 8;
};

/// Draws `count` operators of mixed index and runs the full catalog on each,
/// plus pair and chain checks built with generate_above.
CatalogTally run_random_suite(const SuiteOptions& options);

}  // namespace fpcore
