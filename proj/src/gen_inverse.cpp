#include "fpcore/gen_inverse.hpp"

#include "fpcore/errors.hpp"

#include <algorithm>

namespace fpcore {

std::string_view to_string(InverseKind kind) {
    switch (kind) {
        case InverseKind::Drazin: return "drazin";
        case InverseKind::Group: return "group";
        case InverseKind::MoorePenrose: return "mp";
        case InverseKind::Core: return "core";
        case InverseKind::CoreDagger: return "core-dagger";
        case InverseKind::CoreOfMP: return "core-of-mp";
    }
    return "?";
}

std::string_view to_string(InverseClass cls) {
    switch (cls) {
        case InverseClass::One: return "{1}";
        case InverseClass::Two: return "{2}";
        case InverseClass::OneTwo: return "{1,2}";
        case InverseClass::Penrose4: return "Penrose";
        case InverseClass::Drazin3: return "Drazin";
        case InverseClass::Group3: return "group";
        case InverseClass::Core3: return "core";
    }
    return "?";
}

namespace {

// Zero map on a complement, prescribed action on a basis of a subspace.
Matrix assemble(const Matrix& basis, const Matrix& images, const Matrix& complement) {
    const std::size_t n = basis.rows();
    Matrix domain = basis.hcat(complement);
    Matrix targets = images.hcat(Matrix(n, complement.cols(), basis.field()));
    return from_action(domain, targets);
}

// Coordinates c with (m * basis) c = rhs; m restricted to span(basis) must be injective.
Matrix restricted_solve(const Matrix& m, const Matrix& basis, const Matrix& rhs) {
    auto c = solve(m * basis, rhs);
    if (!c) throw InvariantViolation("restricted system has no solution");
    return *c;
}

void expect(bool ok, const char* what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace

Matrix drazin_matrix(const Matrix& m) {
    const std::size_t exponent = std::max<std::size_t>(matrix_index(m), 1);
    Matrix power = matrix_pow(m, exponent);
    Matrix w = image_basis(power).matrix();
    Matrix u = kernel_basis(power).matrix();
    // m w = w c, so (m|_W)^{-1} w = w c^{-1}.
    auto c = solve(w, m * w);
    expect(c.has_value(), "W is not invariant");
    return assemble(w, w * inverse(*c), u);
}

Matrix moore_penrose_matrix(const Matrix& m) {
    SubspaceBasis im = image_basis(m);
    Matrix kernel_perp = image_basis(m.conj_transpose()).matrix();
    Matrix preimages = kernel_perp * restricted_solve(m, kernel_perp, im.matrix());
    return assemble(im.matrix(), preimages, orth_complement(im).matrix());
}

Matrix core_inverse_matrix(const Matrix& m) {
    if (matrix_index(m) > 1) throw NoCoreInverse();
    SubspaceBasis im = image_basis(m);
    Matrix y = im.matrix();
    Matrix preimages = y * restricted_solve(m, y, y);
    return assemble(y, preimages, orth_complement(im).matrix());
}

Operator drazin(const Operator& op) {
    return Operator::from_padded(drazin_matrix(op.padded()), op.ambient());
}

std::optional<Operator> group_inverse(const Operator& op) {
    if (index(op) > 1) return std::nullopt;
    return drazin(op);
}

Operator moore_penrose(const Operator& op) {
    return Operator::from_padded(moore_penrose_matrix(op.padded()), op.ambient());
}

std::optional<Operator> core_inverse(const Operator& op) {
    Matrix p = op.padded();
    if (matrix_index(p) > 1) return std::nullopt;
    Matrix geometric = core_inverse_matrix(p);
    Matrix algebraic = drazin_matrix(p) * p * moore_penrose_matrix(p);
    expect(geometric == algebraic, "core inverse: geometric and algebraic forms differ");
    return Operator::from_padded(geometric, op.ambient());
}

Operator image_projector(const Operator& op) {
    return Operator::from_padded(orth_projector(image_basis(op.padded())), op.ambient());
}

Operator core_dagger(const Operator& op) {
    auto core = core_inverse(op);
    if (!core) throw NoCoreInverse();
    Operator out = op * image_projector(op);
    expect(out == moore_penrose(*core), "core dagger differs from MP of the core inverse");
    auto core_core = core_inverse(*core);
    expect(core_core && out == *core_core, "core dagger differs from core of the core inverse");
    return out;
}

Operator core_of_mp(const Operator& op) {
    if (index(op) > 1) throw NoCoreInverse();
    Operator mp = moore_penrose(op);
    auto out = core_inverse(mp);
    expect(out.has_value(), "MP inverse of an index <= 1 operator has index > 1");
    auto mp_group = group_inverse(mp);
    expect(mp_group.has_value(), "MP inverse has no group inverse");
    expect(*out == *mp_group * image_projector(mp), "core of MP differs from (φ†)^# P_Im(φ†)");
    return *out;
}

bool is_ep(const Operator& op) {
    return image_basis(op.block()).same_span(image_basis(op.block().conj_transpose()));
}

bool ConditionReport::all() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const Condition& c) { return c.held; });
}

bool ConditionReport::held(std::string_view name) const {
    for (const auto& c : conditions)
        if (c.name == name) return c.held;
    throw Error("no condition named " + std::string(name));
}

ConditionReport check_inverse_class(const Operator& a_op, const Operator& x_op, InverseClass cls) {
    require_same_ambient(a_op, x_op);
    const Matrix a = a_op.padded();
    const Matrix x = x_op.padded();
    ConditionReport report;
    auto add = [&](const char* name, bool held) { report.conditions.push_back({name, held}); };
    auto one = [&] { add("AXA = A", a * x * a == a); };
    auto two = [&] { add("XAX = X", x * a * x == x); };
    auto commute = [&] { add("AX = XA", a * x == x * a); };

    switch (cls) {
        case InverseClass::One: one(); break;
        case InverseClass::Two: two(); break;
        case InverseClass::OneTwo:
            one();
            two();
            break;
        case InverseClass::Penrose4: {
            one();
            two();
            Matrix ax = a * x;
            Matrix xa = x * a;
            add("(AX)* = AX", ax.conj_transpose() == ax);
            add("(XA)* = XA", xa.conj_transpose() == xa);
            break;
        }
        case InverseClass::Drazin3: {
            const std::size_t k = matrix_index(a);
            Matrix ak = matrix_pow(a, k);
            add("A^(k+1)X = A^k", a * ak * x == ak);
            two();
            commute();
            break;
        }
        case InverseClass::Group3:
            one();
            two();
            commute();
            break;
        case InverseClass::Core3: {
            one();
            add("AX^2 = X", a * x * x == x);
            Matrix ax = a * x;
            add("(AX)* = AX", ax.conj_transpose() == ax);
            break;
        }
    }
    return report;
}

}  // namespace fpcore
