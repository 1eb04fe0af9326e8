#include "fpcore/orders.hpp"

#include "fpcore/errors.hpp"

#include <sstream>

namespace fpcore {

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::Space: return "space";
        case Relation::Core: return "core";
        case Relation::GeneralCore: return "general-core";
    }
    return "?";
}

namespace {

bool all_held(const std::vector<Condition>& conditions) {
    for (const auto& c : conditions)
        if (!c.held) return false;
    return true;
}

}  // namespace

OrderReport space_leq(const Operator& phi, const Operator& psi) {
    require_same_ambient(phi, psi);
    OrderReport report;
    report.relation = Relation::Space;
    const Matrix& a = phi.block();
    const Matrix& b = psi.block();
    report.witnesses.push_back({"Im φ ⊆ Im ψ", image_basis(a).is_subspace_of(image_basis(b))});
    report.witnesses.push_back({"Ker ψ ⊆ Ker φ", kernel_basis(b).is_subspace_of(kernel_basis(a))});
    report.verdict = all_held(report.witnesses);
    return report;
}

CoreContext::CoreContext(const Operator& op) : op_(op) {
    auto core = core_inverse(op);
    if (!core) throw IndexTooLarge("the core order is defined on operators of index <= 1");
    core_ = std::move(*core);
    mp_ = moore_penrose(op);
    image_ = image_basis(op.block());
    kernel_ = kernel_basis(op.block());
    left_unit_ = (op * core_).block();
    right_unit_ = (core_ * op).block();
}

OrderReport core_leq(const CoreContext& phi, const Operator& psi) {
    const Operator& a = phi.op();
    const Operator& b = psi;
    require_same_ambient(a, b);
    const Operator& c = phi.core();

    const bool def_left = a * c == b * c;
    const bool def_right = c * a == c * b;

    const Matrix& y = phi.image().matrix();
    const Matrix& k = phi.kernel().matrix();
    const bool agree_on_image = ((a.block() - b.block()) * y).is_zero();
    const bool kernel_to_perp = phi.image().dim() == 0 || phi.kernel().dim() == 0 ||
                                (y.conj_transpose() * b.block() * k).is_zero();

    const bool square_left = a * a == b * a;
    const bool mp_right = phi.mp() * a == phi.mp() * b;

    OrderReport report;
    report.relation = Relation::Core;
    report.witnesses = {
        {"φ φ^⊛ = ψ φ^⊛", def_left},
        {"φ^⊛ φ = φ^⊛ ψ", def_right},
        {"φ|Im(φ) = ψ|Im(φ)", agree_on_image},
        {"ψ(Ker φ) ⊆ [Im φ]^⊥", kernel_to_perp},
        {"φ² = ψ φ", square_left},
        {"φ† φ = φ† ψ", mp_right},
    };
    const bool by_definition = def_left && def_right;
    report.characterizations_agree = def_left == square_left && def_right == mp_right &&
                                     by_definition == (agree_on_image && kernel_to_perp);
    report.verdict = all_held(report.witnesses);
    return report;
}

namespace {

// a * b == target, evaluated entry by entry so a mismatch stops the product early.
bool product_equals(const Matrix& a, const Matrix& b, const Matrix& target) {
    Scalar acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = Scalar::zero(a.field());
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc.add_product(a(i, k), b(k, j));
            if (!(acc == target(i, j))) return false;
        }
    }
    return true;
}

}  // namespace

bool core_related(const CoreContext& phi, const Operator& psi) {
    require_same_ambient(phi.op(), psi);
    const Matrix& c = phi.core().block();
    return product_equals(psi.block(), c, phi.left_unit()) &&
           product_equals(c, psi.block(), phi.right_unit());
}

OrderReport core_leq(const Operator& phi, const Operator& psi) {
    require_same_ambient(phi, psi);
    if (index(psi) > 1) throw IndexTooLarge("the core order is defined on operators of index <= 1");
    return core_leq(CoreContext(phi), psi);
}

Operator gamma(const Operator& phi) { return cn_decomposition(phi).core_part; }

OrderReport general_core_leq(const Operator& phi, const Operator& psi) {
    require_same_ambient(phi, psi);
    OrderReport report = core_leq(gamma(phi), gamma(psi));
    report.relation = Relation::GeneralCore;
    return report;
}

OrderReport order_leq(Relation relation, const Operator& phi, const Operator& psi) {
    switch (relation) {
        case Relation::Space: return space_leq(phi, psi);
        case Relation::Core: return core_leq(phi, psi);
        case Relation::GeneralCore: return general_core_leq(phi, psi);
    }
    throw Error("unknown relation");
}

Operator generate_above(const Operator& phi, Rng& rng) {
    if (index(phi) > 1) throw IndexTooLarge("generate_above needs an operator of index <= 1");
    const Matrix& a = phi.block();
    const Field field = phi.field();
    const std::size_t m = a.rows();
    SubspaceBasis im = image_basis(a);
    SubspaceBasis ker = kernel_basis(a);
    SubspaceBasis perp = orth_complement(im);
    Matrix domain = im.matrix().hcat(ker.matrix());

    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Matrix mix(perp.dim(), ker.dim(), field);
        if (rng.uniform(0, 7) != 0) mix = random_matrix(perp.dim(), ker.dim(), field, rng, 2);
        Matrix images = (a * im.matrix()).hcat(perp.dim() ? perp.matrix() * mix
                                                          : Matrix(m, ker.dim(), field));
        Operator psi(from_action(domain, images), phi.ambient());
        if (index(psi) <= 1) return psi;
    }
    throw GenerationFailed("generate_above: no index <= 1 operator after 64 draws");
}

Operator generate_above(const Operator& phi, std::uint64_t seed) {
    Rng rng(seed);
    return generate_above(phi, rng);
}

namespace {

// Pairwise relation oracle with per-element precomputation.
class RelationTable {
public:
    RelationTable(Relation relation, const std::vector<Operator>& elements)
        : relation_(relation), elements_(elements) {
        if (relation == Relation::Space) return;
        contexts_.reserve(elements.size());
        for (const auto& e : elements)
            contexts_.emplace_back(relation == Relation::Core ? e : gamma(e));
    }

    bool operator()(std::size_t i, std::size_t j) const {
        if (relation_ == Relation::Space) return space_leq(elements_[i], elements_[j]).verdict;
        return core_related(contexts_[i], contexts_[j].op());
    }

private:
    Relation relation_;
    const std::vector<Operator>& elements_;
    std::vector<CoreContext> contexts_;
};

}  // namespace

AxiomReport verify_order_axioms(Relation relation, const std::vector<Operator>& sample,
                                const std::vector<Chain>& chains) {
    std::vector<Operator> elements = sample;
    for (const auto& c : chains) {
        elements.push_back(c.lower);
        elements.push_back(c.middle);
        elements.push_back(c.upper);
    }
    RelationTable leq(relation, elements);
    const std::size_t n = elements.size();

    AxiomReport report;
    report.relation = relation;

    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (elements[i].ambient() == elements[j].ambient() &&
                elements[i].field() == elements[j].field())
                rel[i][j] = leq(i, j);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        ++report.reflexivity_checks;
        if (!rel[i][i]) {
            report.reflexive = false;
            report.reflexivity_failures.push_back(i);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!rel[i][j] && !rel[j][i]) continue;
            ++report.comparable_pairs;
            if (rel[i][j] && rel[j][i] && !(elements[i] == elements[j])) {
                report.antisymmetric = false;
                report.antisymmetry_failures.emplace_back(i, j);
            }
        }
    }

    // Every composable pair discovered in the table, then the explicit chains.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !rel[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j || !rel[j][k]) continue;
                ++report.transitivity_checks;
                if (!rel[i][k]) report.transitive = false;
            }
        }
    }
    for (std::size_t c = 0; c < chains.size(); ++c) {
        const std::size_t lo = sample.size() + 3 * c;
        if (!rel[lo][lo + 1] || !rel[lo + 1][lo + 2]) continue;
        ++report.transitivity_checks;
        if (!rel[lo][lo + 2]) {
            report.transitive = false;
            report.transitivity_failures.push_back(c);
        }
    }

    if (relation == Relation::GeneralCore) {
        Operator a = counterexample_a();
        Operator b = counterexample_b();
        report.counterexample_confirmed = general_core_leq(a, b).verdict &&
                                          general_core_leq(b, a).verdict && !(a == b);
    }
    return report;
}

namespace {

std::string quote(const std::string& name) {
    std::string out = "\"";
    for (char ch : name) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

HasseDiagram hasse(const std::vector<NamedOperator>& set, Relation relation) {
    std::vector<Operator> elements;
    elements.reserve(set.size());
    for (const auto& e : set) elements.push_back(e.op);
    for (std::size_t i = 1; i < elements.size(); ++i) require_same_ambient(elements[0], elements[i]);
    RelationTable leq(relation, elements);

    const std::size_t n = set.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = i == j || leq(i, j);

    HasseDiagram out;
    auto strict = [&](std::size_t i, std::size_t j) { return i != j && rel[i][j] && !rel[j][i]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel[i][j] && rel[j][i]) out.equivalent_pairs.emplace_back(set[i].name, set[j].name);

    std::ostringstream dot;
    dot << "digraph hasse {\n";
    for (const auto& e : set) dot << "  " << quote(e.name) << ";\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!strict(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (strict(i, k) && strict(k, j)) covered = false;
            if (covered) dot << "  " << quote(set[i].name) << " -> " << quote(set[j].name) << ";\n";
        }
    }
    dot << "}\n";
    out.dot = dot.str();
    return out;
}

Operator counterexample_a() {
    return Operator::finite(Matrix::from_rows({{29, 0, 0, 0, 0},
                                               {0, 33, 0, 0, 0},
                                               {0, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 0}}));
}

Operator counterexample_b() {
    return Operator::finite(Matrix::from_rows({{29, 0, 0, 0, 0},
                                               {0, 33, 0, 0, 0},
                                               {0, 0, 0, 0, 0},
                                               {0, 0, 1, 0, 0},
                                               {0, 0, 0, 1, 0}}));
}

}  // namespace fpcore
