#pragma once

#include "fpcore/finite_potent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpcore {

enum class InverseKind { Drazin, Group, MoorePenrose, Core, CoreDagger, CoreOfMP };

std::string_view to_string(InverseKind kind);

/// Inverts φ on W_φ and vanishes on U_φ. Always exists.
Operator drazin(const Operator& op);

/// The commuting {1,2}-inverse; nullopt when index(op) >= 2.
std::optional<Operator> group_inverse(const Operator& op);

/// Inverts φ from [Ker φ]^⊥ onto Im φ and kills [Im φ]^⊥.
Operator moore_penrose(const Operator& op);

/// Inverts φ on Im φ and kills [Im φ]^⊥; nullopt when index(op) >= 2.
///
/// The result is built geometrically and then compared against φ^# φ φ†;
/// a mismatch throws InvariantViolation.
std::optional<Operator> core_inverse(const Operator& op);

/// φ ∘ P_{Im φ}, the core inverse of the core inverse. Throws NoCoreInverse
/// when index(op) >= 2.
Operator core_dagger(const Operator& op);

/// Core inverse of φ†. Throws NoCoreInverse when index(op) >= 2.
Operator core_of_mp(const Operator& op);

/// Im φ = Im φ*.
bool is_ep(const Operator& op);

/// Orthogonal projector onto Im φ, as an operator on the same ambient.
Operator image_projector(const Operator& op);

// Matrix-level constructions on padded matrices.
Matrix drazin_matrix(const Matrix& m);
Matrix moore_penrose_matrix(const Matrix& m);
/// Requires matrix_index(m) <= 1.
Matrix core_inverse_matrix(const Matrix& m);

enum class InverseClass { One, Two, OneTwo, Penrose4, Drazin3, Group3, Core3 };

std::string_view to_string(InverseClass cls);

struct Condition {
    std::string name;
    bool held = false;
};

struct ConditionReport {
    std::vector<Condition> conditions;

    bool all() const;
    /// Verdict for a named condition; throws if absent.
    bool held(std::string_view name) const;
};

/// Evaluates each defining equation of `cls` for the candidate inverse x of a.
ConditionReport check_inverse_class(const Operator& a, const Operator& x, InverseClass cls);

}  // namespace fpcore
