#include "commands.hpp"

#include "fpcore/catalog.hpp"
#include "fpcore/errors.hpp"
#include "fpcore/gen_inverse.hpp"
#include "fpcore/operator_file.hpp"
#include "fpcore/orders.hpp"
#include "fpcore/probe.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace fpcore::cli {

namespace {

struct Style {
    bool color = false;
    std::string paint(const std::string& text, const char* code) const {
        return color ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
    }
    std::string pass() const { return paint("PASS", "32"); }
    std::string fail() const { return paint("FAIL", "31;1"); }
    std::string verdict(bool v) const { return v ? paint("true", "32") : paint("false", "31"); }
};

std::string vector_text(const Matrix& m, std::size_t col) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, col).is_zero()) {
            ++nonzero;
            where = i;
        }
    }
    if (nonzero == 1 && m(where, col) == Scalar::one(m.field())) return "e" + std::to_string(where + 1);
    std::string out = "(";
    for (std::size_t i = 0; i < m.rows(); ++i) out += (i ? ", " : "") + m(i, col).to_string();
    return out + ")";
}

std::string span_text(const SubspaceBasis& basis) {
    if (basis.dim() == 0) return "0";
    const Matrix m = basis.canonical().matrix();
    std::string out = "span{";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + vector_text(m, j);
    return out + "}";
}

void print_matrix(std::ostream& out, const char* label, const Matrix& m) {
    out << label << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
        out << "]\n";
    }
}

std::string display_name(const OperatorFile& f, const std::string& path) {
    if (!f.name.empty()) return f.name;
    return std::filesystem::path(path).stem().string();
}

int inspect(const std::string& path, std::ostream& out, const Style& style) {
    OperatorFile f = load_operator_file(path);
    const Operator& op = f.op;
    const AstDecomposition ast = ast_decomposition(op);
    const CnDecomposition cn = cn_decomposition(op);
    const Ambient& amb = op.ambient();

    out << "name: " << display_name(f, path) << "\n";
    out << "field: " << to_string(op.field()) << "\n";
    out << "ambient: "
        << (amb.is_countable() ? "countable, support " : "finite, dim ") << amb.support << "\n";
    out << "index: " << ast.index << ", EP: " << style.verdict(is_ep(op))
        << ", W = " << span_text(ast.W) << "\n";
    out << "U = " << span_text(ast.U_block) << (ast.tail_in_U ? " ⊕ span{e_k : k > " + std::to_string(amb.support) + "}" : "")
        << "\n";
    out << "rank: " << rank(op.block()) << "\n";
    print_matrix(out, "core part", cn.core_part.block());
    print_matrix(out, "nilpotent part", cn.nilpotent_part.block());
    return kOk;
}

int inverse(const std::string& kind, const std::string& path, std::ostream& out) {
    OperatorFile f = load_operator_file(path);
    const Operator& op = f.op;
    Operator result;
    if (kind == "drazin") {
        result = drazin(op);
    } else if (kind == "group") {
        auto g = group_inverse(op);
        if (!g) throw IndexTooLarge("group inverse exists iff index ≤ 1 (index is " + std::to_string(index(op)) + ")");
        result = *g;
    } else if (kind == "mp") {
        result = moore_penrose(op);
    } else if (kind == "core") {
        auto c = core_inverse(op);
        if (!c) throw IndexTooLarge("core inverse exists iff index ≤ 1 (index is " + std::to_string(index(op)) + ")");
        result = *c;
    } else if (kind == "core-dagger") {
        result = core_dagger(op);
    } else {
        result = core_of_mp(op);
    }
    out << format_operator_file(result, kind + "(" + display_name(f, path) + ")");
    return kOk;
}

int order(const std::string& relation_text, const std::string& a_path, const std::string& b_path,
          std::ostream& out, const Style& style) {
    static const std::map<std::string, Relation> relations{
        {"space", Relation::Space}, {"core", Relation::Core}, {"general-core", Relation::GeneralCore}};
    const Relation relation = relations.at(relation_text);
    OperatorFile a = load_operator_file(a_path);
    OperatorFile b = load_operator_file(b_path);
    if (relation == Relation::Core && (index(a.op) > 1 || index(b.op) > 1))
        throw IndexTooLarge("the core order compares operators of index ≤ 1");

    OrderReport r = order_leq(relation, a.op, b.op);
    out << "relation: " << to_string(relation) << "\n";
    out << "φ = " << display_name(a, a_path) << ", ψ = " << display_name(b, b_path) << "\n";
    out << "verdict: " << style.verdict(r.verdict) << "\n";
    for (const auto& w : r.witnesses) out << "  " << (w.held ? "[x] " : "[ ] ") << w.name << "\n";
    if (relation != Relation::Space)
        out << "characterizations agree: " << style.verdict(r.characterizations_agree) << "\n";
    return kOk;
}

int print_tally(const CatalogTally& tally, std::ostream& out, const Style& style) {
    for (const auto& e : tally.entries()) {
        out << (e.failed ? style.fail() : style.pass()) << "  " << e.passed << "/"
            << (e.passed + e.failed) << "  " << e.name << "\n";
    }
    const bool ok = tally.all_passed();
    out << (ok ? "all identities hold" : "some identities failed") << "\n";
    return ok ? kOk : kVerificationFailed;
}

int verify_file(const std::string& path, std::uint64_t seed, std::ostream& out, const Style& style) {
    OperatorFile f = load_operator_file(path);
    CatalogTally tally;
    Rng rng(seed);
    out << "operator: " << display_name(f, path) << "\n";
    out << "seed: " << seed << "\n";
    try {
        check_operator(f.op, tally, rng);
        if (index(f.op) <= 1) {
            Operator psi = generate_above(f.op, rng);
            Operator chi = generate_above(psi, rng);
            check_core_pair(f.op, psi, tally);
            check_core_pair(psi, chi, tally);
            check_core_chain(f.op, psi, chi, tally);
        }
    } catch (const InvariantViolation& e) {
        tally.record(std::string("internal invariant: ") + e.what(), false);
    }
    return print_tally(tally, out, style);
}

int verify_suite(const SuiteOptions& options, std::ostream& out, const Style& style) {
    out << "suite: random\n";
    out << "seed: " << options.seed << ", count: " << options.count << ", dim: " << options.dim << "\n";
    return print_tally(run_random_suite(options), out, style);
}

int hasse_cmd(const std::string& relation_text, const std::vector<std::string>& paths,
              const std::string& out_path, std::ostream& out) {
    const Relation relation = relation_text == "core" ? Relation::Core : Relation::GeneralCore;
    std::vector<NamedOperator> set;
    for (const auto& p : paths) {
        OperatorFile f = load_operator_file(p);
        if (relation == Relation::Core && index(f.op) > 1)
            throw IndexTooLarge(p + ": the core order compares operators of index ≤ 1");
        set.push_back({display_name(f, p), f.op});
    }
    HasseDiagram h = hasse(set, relation);
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ParseError(out_path + ": cannot write file");
    file << h.dot;
    out << "wrote " << out_path << " (" << set.size() << " nodes)\n";
    for (const auto& [x, y] : h.equivalent_pairs)
        out << "equivalent: " << x << " and " << y << " lie below each other but differ\n";
    return kOk;
}

int demo(std::size_t max_m, std::ostream& out) {
    out << preimage_growth(max_m).to_csv();
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
    Style style{color};
    CLI::App app{"Exact generalized inverses and orders of finite potent operators", "fpcore"};
    app.require_subcommand(1);

    std::string file;
    auto* inspect_cmd = app.add_subcommand("inspect", "index, AST bases, CN parts and EP flag");
    inspect_cmd->add_option("file", file, "operator file")->required();

    std::string kind;
    auto* inverse_cmd = app.add_subcommand("inverse", "print a generalized inverse as an operator file");
    inverse_cmd->add_option("--kind", kind, "inverse to compute")
        ->required()
        ->check(CLI::IsMember({"drazin", "group", "mp", "core", "core-dagger", "core-of-mp"}));
    inverse_cmd->add_option("file", file, "operator file")->required();

    std::string relation;
    std::string file_b;
    auto* order_cmd = app.add_subcommand("order", "decide φ ≤ ψ and show the witnesses");
    order_cmd->add_option("--relation", relation, "order to test")
        ->required()
        ->check(CLI::IsMember({"space", "core", "general-core"}));
    order_cmd->add_option("a", file, "operator file for φ")->required();
    order_cmd->add_option("b", file_b, "operator file for ψ")->required();

    SuiteOptions suite;
    std::string suite_name;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
    verify_cmd->add_option("file", file, "operator file");
    verify_cmd->add_option("--suite", suite_name, "random suite instead of a file")
        ->check(CLI::IsMember({"random"}));
    verify_cmd->add_option("--seed", suite.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--count", suite.count, "number of random operators")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--dim", suite.dim, "dimension of random operators")
        ->capture_default_str()
        ->check(CLI::Range(1, 12));

    std::vector<std::string> files;
    std::string out_path;
    auto* hasse_sub = app.add_subcommand("hasse", "write the covering relation as DOT");
    hasse_sub->add_option("--relation", relation, "order to draw")
        ->required()
        ->check(CLI::IsMember({"core", "general-core"}));
    hasse_sub->add_option("files", files, "operator files")->required();
    hasse_sub->add_option("--out", out_path, "DOT output path")->required();

    std::string demo_name;
    std::size_t max_m = 10;
    auto* demo_cmd = app.add_subcommand("demo", "built-in demonstrations");
    demo_cmd->add_option("name", demo_name, "demonstration")
        ->required()
        ->check(CLI::IsMember({"nonclosed-image"}));
    demo_cmd->add_option("--max-m", max_m, "largest truncation level")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (inspect_cmd->parsed()) return inspect(file, out, style);
        if (inverse_cmd->parsed()) return inverse(kind, file, out);
        if (order_cmd->parsed()) return order(relation, file, file_b, out, style);
        if (verify_cmd->parsed()) {
            if (suite_name.empty() == file.empty()) {
                err << "error: verify takes either a file or --suite random\n";
                return kInputError;
            }
            if (!suite_name.empty()) return verify_suite(suite, out, style);
            return verify_file(file, suite.seed, out, style);
        }
        if (hasse_sub->parsed()) return hasse_cmd(relation, files, out_path, out);
        if (demo_cmd->parsed()) return demo(max_m, out);
    } catch (const InvariantViolation& e) {
        err << "error: internal invariant failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace fpcore::cli
