#include "fpcore/catalog.hpp"

#include "fpcore/errors.hpp"
#include "fpcore/gen_inverse.hpp"
#include "fpcore/orders.hpp"

#include <algorithm>

namespace fpcore {

void CatalogTally::record(const std::string& name, bool ok) {
    Entry& e = slot(name);
    (ok ? e.passed : e.failed) += 1;
}

void CatalogTally::record_equivalence(const std::string& name, bool lhs, bool rhs) {
    Entry& e = slot(name);
    (lhs == rhs ? e.passed : e.failed) += 1;
    if (lhs && rhs) ++e.positives;
}

void CatalogTally::merge(const CatalogTally& other) {
    for (const auto& o : other.entries_) {
        Entry& e = slot(o.name);
        e.passed += o.passed;
        e.failed += o.failed;
        e.positives += o.positives;
    }
}

const CatalogTally::Entry* CatalogTally::find(const std::string& name) const {
    auto it = lookup_.find(name);
    return it == lookup_.end() ? nullptr : &entries_[it->second];
}

bool CatalogTally::all_passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.failed == 0; });
}

CatalogTally::Entry& CatalogTally::slot(const std::string& name) {
    auto [it, inserted] = lookup_.try_emplace(name, entries_.size());
    if (inserted) entries_.push_back(Entry{name, 0, 0, 0});
    return entries_[it->second];
}

namespace {

Matrix padded_pow(const Matrix& p, std::size_t n) { return matrix_pow(p, n); }

void check_structure(const Operator& op, std::size_t idx, CatalogTally& t) {
    const Matrix p = op.padded();
    const Matrix ps = p.conj_transpose();
    const std::size_t n = p.rows();

    bool monotone = true;
    std::size_t prev = n;
    for (std::size_t j = 0; j <= idx + 2; ++j) {
        std::size_t r = rank(padded_pow(p, j));
        if (r > prev || (j > idx && r != prev)) monotone = false;
        prev = r;
    }
    t.record("rank(φ^j) non-increasing and constant for j >= index", monotone);
    t.record("rank φ = rank φ*", rank(p) == rank(ps));
    t.record("dim Ker φ + rank φ = n", kernel_basis(p).dim() + rank(p) == n);
    SubspaceBasis im = image_basis(p);
    SubspaceBasis ker_star = kernel_basis(ps);
    t.record("Im φ and Ker φ* are orthogonal complements",
             im.is_orthogonal_to(ker_star) && im.dim() + ker_star.dim() == n);

    AstDecomposition ast = ast_decomposition(op);
    const Matrix& a = op.block();
    Matrix wu = ast.W.matrix().hcat(ast.U_block.matrix());
    const bool spans = rank(wu) == op.support();
    const bool invariant = SubspaceBasis::span_of(a * ast.W.matrix()).same_span(ast.W) &&
                           SubspaceBasis::span_of(a * ast.U_block.matrix()).is_subspace_of(ast.U_block);
    t.record("AST: W ⊕ U = V with φ(W) = W and φ(U) ⊆ U", spans && invariant && ast.index == idx);

    const std::size_t e = std::max<std::size_t>(idx, 1);
    Matrix u_pad = kernel_basis(padded_pow(p, e)).matrix();
    bool nil_order = (padded_pow(p, idx) * u_pad).is_zero();
    if (idx >= 1 && u_pad.cols() > 0)
        nil_order = nil_order && !(padded_pow(p, idx - 1) * u_pad).is_zero();
    t.record("AST: φ|U nilpotent of order index", nil_order);

    CnDecomposition cn = cn_decomposition(op);
    const Operator& core = cn.core_part;
    const Operator& nil = cn.nilpotent_part;
    t.record("CN: φ₁ + φ₂ = φ", core + nil == op);
    t.record("CN: φ₁φ₂ = φ₂φ₁ = 0", (core * nil).is_zero() && (nil * core).is_zero());
    t.record("CN: index(φ₁) <= 1", index(core) <= 1);
    t.record("CN: φ₂^index = 0", padded_pow(nil.padded(), e).is_zero());
    t.record("CN: φ₁ = φ φ^D φ", core == op * drazin(op) * op);

    const bool low = idx <= 1;
    const bool u_is_ker = SubspaceBasis(u_pad).same_span(kernel_basis(p));
    const bool w_is_im = image_basis(padded_pow(p, e)).same_span(im);
    t.record("index <= 1 ⟺ U_φ = Ker φ ⟺ W_φ = Im φ", low == u_is_ker && u_is_ker == w_is_im);

    const Operator g = gamma(op);
    t.record("Γ(Γ(φ)) = Γ(φ)", gamma(g) == g);
    if (low) t.record("Γ(φ) = φ when index <= 1", g == op);
    t.record("φ <^⊛ φ (general core order)", general_core_leq(op, op).verdict);
    t.record("φ <^s φ", space_leq(op, op).verdict);
}

void check_moore_penrose(const Operator& op, CatalogTally& t) {
    const Operator mp = moore_penrose(op);
    const Matrix p = op.padded();
    t.record("φ† satisfies the four Penrose conditions",
             check_inverse_class(op, mp, InverseClass::Penrose4).all());
    t.record("(φ†)† = φ", moore_penrose(mp) == op);
    t.record("φ†φ = P_[Ker φ]^⊥",
             mp.padded() * p == orth_projector(orth_complement(kernel_basis(p))));
    t.record("φφ† = P_Im φ", p * mp.padded() == orth_projector(image_basis(p)));

    const Operator star = op.adjoint();
    const Operator star_mp = moore_penrose(star);
    t.record("(φ*)† = (φ†)*", star_mp == mp.adjoint());
    t.record("φ* φ φ† = φ*", star * op * mp == star);
    t.record("φ† φ φ* = φ*", mp * op * star == star);
    t.record("(φ*)† φ* φ = φ", star_mp * star * op == op);
    t.record("φ φ* (φ*)† = φ", op * star * star_mp == op);
}

void check_index_le1(const Operator& op, CatalogTally& t, Rng& rng) {
    const Field f = op.field();
    const Operator g = *group_inverse(op);
    const Operator c = *core_inverse(op);
    const Operator mp = moore_penrose(op);
    const Operator proj = image_projector(op);
    const Matrix& a = op.block();
    const bool ep = is_ep(op);

    t.record("group inverse satisfies its three axioms",
             check_inverse_class(op, g, InverseClass::Group3).all());
    t.record("(φ^#)^# = φ", *group_inverse(g) == op);
    bool powers = true;
    for (std::size_t n : {2u, 3u}) {
        auto gp = group_inverse(op.pow(n));
        powers = powers && gp && *gp == g.pow(n);
    }
    t.record("(φ^n)^# = (φ^#)^n for n = 2, 3", powers);

    t.record("φ^⊛ = φ^# φ φ†", c == g * op * mp);
    t.record("φ^⊛ satisfies φXφ = φ, φX² = X, (φX)* = φX",
             check_inverse_class(op, c, InverseClass::Core3).all());
    t.record("φ φ^⊛ = P_Im φ and Im φ^⊛ ⊆ Im φ",
             op * c == proj && image_basis(c.block()).is_subspace_of(image_basis(a)));

    Matrix e(a.rows(), a.cols(), f);
    while (e.is_zero()) e = random_matrix(a.rows(), a.cols(), f, rng, 2);
    Operator perturbed(c.block() + e, op.ambient());
    t.record("perturbed core inverse violates a core condition",
             !check_inverse_class(op, perturbed, InverseClass::Core3).all());

    t.record("index(φ^⊛) <= 1", index(c) <= 1);
    t.record("Im φ^⊛ = Im φ and Ker φ^⊛ = [Im φ]^⊥",
             image_basis(c.block()).same_span(image_basis(a)) &&
                 kernel_basis(c.block()).same_span(orth_complement(image_basis(a))));

    bool iterated = true;
    for (std::size_t n : {2u, 3u, 4u}) iterated = iterated && c == op.pow(n - 1) * c.pow(n);
    t.record("φ^⊛ = φ^(n-1) (φ^⊛)^n for n = 2, 3, 4", iterated);

    const Operator cc = *core_inverse(c);
    const Operator c_mp = moore_penrose(c);
    t.record("(φ^⊛)^⊛ = (φ^⊛)† = φ P_Im φ", cc == c_mp && c_mp == op * proj);
    t.record("core_dagger(φ) = φ P_Im φ", core_dagger(op) == op * proj);
    t.record("φ^⊛ and (φ^⊛)† are EP", is_ep(c) && is_ep(c_mp));
    t.record("(φ^⊛)† = (φ^⊛)^# = (φ^⊛)^D", c_mp == *group_inverse(c) && c_mp == drazin(c));

    t.record("φ^⊛ is a {1,2}-inverse of φ", check_inverse_class(op, c, InverseClass::OneTwo).all());
    t.record("(φ^⊛)² φ = φ^#", c * c * op == g);
    bool power_core = true;
    for (std::size_t m : {2u, 3u}) {
        auto cm = core_inverse(op.pow(m));
        power_core = power_core && cm && *cm == c.pow(m);
    }
    t.record("(φ^⊛)^m = (φ^m)^⊛ for m = 2, 3", power_core);
    t.record("φ^⊛ φ = φ^# φ", c * op == g * op);

    t.record_equivalence("φ^⊛ = φ^# ⟺ φ is EP", c == g, ep);
    t.record_equivalence("φ^⊛ = φ† ⟺ φ is EP", c == mp, ep);
    t.record_equivalence("φ^⊛ = 0 ⟺ φ = 0", c.is_zero(), op.is_zero());
    t.record_equivalence("φ^⊛ = P_Im φ ⟺ φ² = φ", c == proj, op * op == op);
    t.record_equivalence("φ^⊛ = φ ⟺ φ³ = φ and φ is EP", c == op, op.pow(3) == op && ep);
    const Operator star = op.adjoint();
    t.record_equivalence("φ^⊛ = φ* ⟺ φφ*φ = φ and φ is EP", c == star, op * star * op == op && ep);

    const Operator mp_core = core_of_mp(op);
    t.record("(φ†)^⊛ = (φ†)^# P_Im(φ†)", mp_core == *group_inverse(mp) * image_projector(mp));
    t.record("index(φ†) <= 1", index(mp) <= 1);

    const bool ii = cc == op;
    const bool iii = c * op == op * c;
    const bool iv = mp_core == op;
    const bool v = c_mp == moore_penrose(mp);
    const bool agree = ep == ii && ii == iii && iii == iv && iv == v;
    t.record_equivalence("EP ⟺ (φ^⊛)^⊛ = φ ⟺ φ^⊛φ = φφ^⊛ ⟺ (φ†)^⊛ = φ ⟺ (φ^⊛)† = (φ†)†",
                         ep, agree ? ep : !ep);

    t.record("φ ≤^⊛ φ", core_leq(op, op).verdict);
}

}  // namespace

void check_operator(const Operator& op, CatalogTally& t, Rng& rng) {
    const std::size_t idx = index(op);
    check_structure(op, idx, t);

    t.record("Drazin inverse satisfies its three axioms",
             check_inverse_class(op, drazin(op), InverseClass::Drazin3).all());
    t.record("group inverse exists ⟺ index <= 1", group_inverse(op).has_value() == (idx <= 1));
    t.record("core inverse exists ⟺ index <= 1", core_inverse(op).has_value() == (idx <= 1));
    if (idx >= 2) {
        bool refused = false;
        try {
            core_dagger(op);
        } catch (const NoCoreInverse&) {
            refused = true;
        }
        t.record("core_dagger refuses index >= 2", refused);
    }

    check_moore_penrose(op, t);
    if (idx <= 1) check_index_le1(op, t, rng);
}

void check_core_pair(const Operator& phi, const Operator& psi, CatalogTally& t) {
    const OrderReport report = core_leq(phi, psi);
    t.record("definition, restriction, and φ²/φ† characterizations agree",
             report.characterizations_agree);
    t.record("general core order coincides with core order on index <= 1",
             general_core_leq(phi, psi).verdict == report.verdict);
    if (!report.verdict) return;

    const Matrix& a = phi.block();
    const Matrix& b = psi.block();
    SubspaceBasis im_a = image_basis(a);
    SubspaceBasis ker_a = kernel_basis(a);
    SubspaceBasis im_b = image_basis(b);
    SubspaceBasis ker_b = kernel_basis(b);

    t.record("φ ≤^⊛ ψ ⟹ Im φ ⊆ Im ψ and Ker ψ ⊆ Ker φ",
             im_a.is_subspace_of(im_b) && ker_b.is_subspace_of(ker_a));
    t.record("φ ≤^⊛ ψ ⟹ φ <^s ψ", space_leq(phi, psi).verdict);
    if (is_ep(phi)) {
        AstDecomposition ast = ast_decomposition(phi);
        bool keeps = SubspaceBasis::span_of(b * ast.W.matrix()).is_subspace_of(ast.W) &&
                     SubspaceBasis::span_of(b * ast.U_block.matrix()).is_subspace_of(ast.U_block);
        t.record("φ ≤^⊛ ψ with φ EP ⟹ ψ leaves W_φ and U_φ invariant", keeps);
    }
    SubspaceBasis meet = im_b.intersect(ker_a);
    t.record("φ ≤^⊛ ψ ⟹ Ker φ = Ker ψ ⊕ (Im ψ ∩ Ker φ)",
             ker_b.dim() + meet.dim() == ker_a.dim() && ker_b.intersect(meet).dim() == 0 &&
                 ker_b.sum(meet).same_span(ker_a));
    const bool back = core_leq(psi, phi).verdict;
    t.record("φ ≤^⊛ ψ and ψ ≤^⊛ φ ⟹ φ = ψ", !back || phi == psi);
}

void check_core_chain(const Operator& phi, const Operator& psi, const Operator& chi,
                      CatalogTally& t) {
    if (!core_leq(phi, psi).verdict || !core_leq(psi, chi).verdict) return;
    t.record("φ ≤^⊛ ψ ≤^⊛ χ ⟹ φ ≤^⊛ χ", core_leq(phi, chi).verdict);
    const Matrix y = image_basis(phi.block()).matrix();
    t.record("φ ≤^⊛ ψ ≤^⊛ χ ⟹ φ|Im φ = χ|Im φ", ((phi.block() - chi.block()) * y).is_zero());
    t.record("general core order is transitive along the chain", general_core_leq(phi, chi).verdict);
}

CatalogTally run_random_suite(const SuiteOptions& options) {
    CatalogTally tally;
    Rng rng(options.seed);
    const std::string internal = "no internal invariant violations";
    for (std::size_t s = 0; s < options.count; ++s) {
        const bool complex = options.complex_every && s % options.complex_every == options.complex_every - 1;
        const bool countable =
            options.countable_every && s % options.countable_every == options.countable_every - 1;
        const Field field = complex ? Field::Complex : Field::Real;
        auto wrap = [&](const Operator& op) {
            return countable ? Operator::countable(op.block()) : op;
        };

        try {
            Operator op = wrap(random_any_index(options.dim, field, rng));
            check_operator(op, tally, rng);
            if (index(op) <= 1) {
                Operator psi = generate_above(op, rng);
                Operator chi = generate_above(psi, rng);
                Operator other = wrap(random_index_le1_mixed(options.dim, field, rng));
                check_core_pair(op, psi, tally);
                check_core_pair(psi, chi, tally);
                check_core_pair(op, other, tally);
                check_core_pair(other, op, tally);
                check_core_chain(op, psi, chi, tally);
            }
            tally.record(internal, true);
        } catch (const Error&) {
            tally.record(internal, false);
        }
    }
    return tally;
}

}  // namespace fpcore
