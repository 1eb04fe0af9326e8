#pragma once

#include "fpcore/finite_potent.hpp"
#include "fpcore/gen_inverse.hpp"
#include "fpcore/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpcore {

enum class Relation { Space, Core, GeneralCore };

std::string_view to_string(Relation relation);

/// Outcome of an order query. `verdict` is the conjunction of the witnesses.
struct OrderReport {
    Relation relation = Relation::Space;
    bool verdict = false;
    std::vector<Condition> witnesses;
    /// For the core order: the definition and both characterizations gave the
    /// same answer. Always true for the other relations.
    bool characterizations_agree = true;
};

/// Im φ ⊆ Im ψ and Ker ψ ⊆ Ker φ.
OrderReport space_leq(const Operator& phi, const Operator& psi);

/// φ φ^⊛ = ψ φ^⊛ and φ^⊛ φ = φ^⊛ ψ, evaluated alongside the restriction
/// characterization and the φ² = ψφ, φ†φ = φ†ψ characterization.
/// Throws IndexTooLarge unless both operators have index <= 1.
OrderReport core_leq(const Operator& phi, const Operator& psi);

/// The core part φ₁ of the CN decomposition.
Operator gamma(const Operator& phi);

/// Core order applied to the core parts.
OrderReport general_core_leq(const Operator& phi, const Operator& psi);

OrderReport order_leq(Relation relation, const Operator& phi, const Operator& psi);

/// Derived data of an index <= 1 operator reused across many core-order
/// evaluations.
class CoreContext {
public:
    explicit CoreContext(const Operator& op);

    const Operator& op() const { return op_; }
    const Operator& core() const { return core_; }
    const Operator& mp() const { return mp_; }
    const SubspaceBasis& image() const { return image_; }
    const SubspaceBasis& kernel() const { return kernel_; }
    /// φ φ^⊛ and φ^⊛ φ.
    const Matrix& left_unit() const { return left_unit_; }
    const Matrix& right_unit() const { return right_unit_; }

private:
    Operator op_;
    Operator core_;
    Operator mp_;
    SubspaceBasis image_;
    SubspaceBasis kernel_;
    Matrix left_unit_;
    Matrix right_unit_;
};

/// ψ must have index <= 1; only φ's derived data is needed.
OrderReport core_leq(const CoreContext& phi, const Operator& psi);
/// Definition-only test, short-circuiting on the first failed equality.
bool core_related(const CoreContext& phi, const Operator& psi);

/// ψ with index(ψ) <= 1 and φ ≤ ψ in the core order: ψ = φ on Im φ and a
/// random map Ker φ → [Im φ]^⊥. Throws GenerationFailed after 64 rejected draws.
Operator generate_above(const Operator& phi, Rng& rng);
Operator generate_above(const Operator& phi, std::uint64_t seed);

struct Chain {
    Operator lower;
    Operator middle;
    Operator upper;
};

struct AxiomReport {
    Relation relation = Relation::Space;
    bool reflexive = true;
    bool antisymmetric = true;
    bool transitive = true;
    std::size_t reflexivity_checks = 0;
    std::size_t comparable_pairs = 0;
    std::size_t transitivity_checks = 0;
    /// Indices into sample ++ flattened chains.
    std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_failures;
    std::vector<std::size_t> reflexivity_failures;
    std::vector<std::size_t> transitivity_failures;  ///< chain indices
    /// GeneralCore only: the built-in 5x5 pair is comparable both ways yet distinct.
    std::optional<bool> counterexample_confirmed;
};

/// Reflexivity on every element, antisymmetry on every comparable pair of
/// sample ++ chain members, transitivity on every chain.
AxiomReport verify_order_axioms(Relation relation, const std::vector<Operator>& sample,
                                const std::vector<Chain>& chains);

struct NamedOperator {
    std::string name;
    Operator op;
};

struct HasseDiagram {
    std::string dot;
    /// Distinct elements below each other in both directions.
    std::vector<std::pair<std::string, std::string>> equivalent_pairs;
};

/// Covering relation as a DOT digraph. Nodes in input order, edges x -> y for
/// x strictly below y with nothing strictly between.
HasseDiagram hasse(const std::vector<NamedOperator>& set, Relation relation);

/// The 5x5 pair with equal core parts and different nilpotent parts.
Operator counterexample_a();
Operator counterexample_b();

}  // namespace fpcore
