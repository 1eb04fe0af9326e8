#include "fpcore/catalog.hpp"
#include "fpcore/errors.hpp"
#include "fpcore/finite_potent.hpp"
#include "fpcore/gen_inverse.hpp"
#include "fpcore/operator_file.hpp"
#include "fpcore/orders.hpp"
#include "fpcore/probe.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fpcore;

namespace {

// Scalars cross the boundary as (re, im) pairs of "p/q" strings so that the
// Python side can build exact fractions without going through floats.
using Entry = std::pair<std::string, std::string>;

Operator from_rows(const std::vector<std::vector<Entry>>& rows, bool gaussian, bool countable) {
    const std::size_t n = rows.size();
    const Field field = gaussian ? Field::Complex : Field::Real;
    Matrix block(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionMismatch("rows must form a square matrix");
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class re = Scalar::parse_rational(rows[i][j].first);
            mpq_class im = Scalar::parse_rational(rows[i][j].second);
            if (!gaussian && im != 0) throw FieldMismatch();
            block(i, j) = gaussian ? Scalar(re, im) : Scalar(re);
        }
    }
    return countable ? Operator::countable(std::move(block)) : Operator::finite(std::move(block));
}

std::vector<std::vector<Entry>> to_rows(const Operator& op) {
    const Matrix& m = op.block();
    std::vector<std::vector<Entry>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i].emplace_back(rational_to_string(m(i, j).re()), rational_to_string(m(i, j).im()));
    return rows;
}

py::dict order_dict(const OrderReport& r) {
    py::dict d;
    d["relation"] = std::string(to_string(r.relation));
    d["verdict"] = r.verdict;
    std::vector<std::pair<std::string, bool>> witnesses;
    for (const auto& w : r.witnesses) witnesses.emplace_back(w.name, w.held);
    d["witnesses"] = witnesses;
    d["characterizations_agree"] = r.characterizations_agree;
    return d;
}

Relation relation_of(const std::string& name) {
    if (name == "space") return Relation::Space;
    if (name == "core") return Relation::Core;
    if (name == "general-core") return Relation::GeneralCore;
    throw Error("unknown relation \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_fpcore, m) {
    m.doc() = "Exact generalized inverses and orders of finite potent operators";

    auto error = py::register_exception<Error>(m, "FpcoreError");
    py::register_exception<IndexTooLarge>(m, "IndexTooLarge", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    py::class_<Operator>(m, "Operator")
        .def_static("from_rows", &from_rows, py::arg("rows"), py::arg("gaussian") = false,
                    py::arg("countable") = false)
        .def_static("from_json", [](const std::string& text) { return parse_operator_file(text).op; })
        .def_static("load", [](const std::string& path) { return load_operator_file(path).op; })
        .def("to_json", &format_operator_file, py::arg("name") = "")
        .def("rows", &to_rows)
        .def_property_readonly("support", &Operator::support)
        .def_property_readonly("gaussian", [](const Operator& op) { return op.field() == Field::Complex; })
        .def_property_readonly("countable", [](const Operator& op) { return op.ambient().is_countable(); })
        .def("adjoint", &Operator::adjoint)
        .def("__pow__", &Operator::pow)
        .def("__add__", [](const Operator& a, const Operator& b) { return a + b; })
        .def("__sub__", [](const Operator& a, const Operator& b) { return a - b; })
        .def("__matmul__", [](const Operator& a, const Operator& b) { return a * b; })
        .def("__eq__", [](const Operator& a, const Operator& b) { return a == b; })
        .def("__repr__", [](const Operator& op) {
            return "<Operator support=" + std::to_string(op.support()) +
                   (op.ambient().is_countable() ? " countable" : " finite") +
                   (op.field() == Field::Complex ? " gaussian>" : " rational>");
        });

    m.def("index", py::overload_cast<const Operator&>(&index));
    m.def("is_ep", &is_ep);
    m.def("drazin", &drazin);
    m.def("group_inverse", &group_inverse);
    m.def("moore_penrose", &moore_penrose);
    m.def("core_inverse", &core_inverse);
    m.def("core_dagger", &core_dagger);
    m.def("core_of_mp", &core_of_mp);
    m.def("gamma", [](const Operator& op) { return fpcore::gamma(op); });
    m.def("cn_parts", [](const Operator& op) {
        CnDecomposition cn = cn_decomposition(op);
        return std::make_pair(cn.core_part, cn.nilpotent_part);
    });

    m.def("order_leq", [](const std::string& relation, const Operator& phi, const Operator& psi) {
        return order_dict(order_leq(relation_of(relation), phi, psi));
    });
    m.def("hasse", [](const std::vector<std::pair<std::string, Operator>>& named, const std::string& relation) {
        std::vector<NamedOperator> set;
        for (const auto& [name, op] : named) set.push_back({name, op});
        HasseDiagram h = hasse(set, relation_of(relation));
        return std::make_pair(h.dot, h.equivalent_pairs);
    });
    m.def("counterexample_a", &counterexample_a);
    m.def("counterexample_b", &counterexample_b);
    m.def("generate_above", py::overload_cast<const Operator&, std::uint64_t>(&generate_above));

    m.def("preimage_growth_csv", [](std::size_t max_m) { return preimage_growth(max_m).to_csv(); });
    m.def(
        "run_random_suite",
        [](std::uint64_t seed, std::size_t count, std::size_t dim) {
            SuiteOptions options;
            options.seed = seed;
            options.count = count;
            options.dim = dim;
            std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
            {
                py::gil_scoped_release release;
                const CatalogTally tally = run_random_suite(options);
                for (const auto& e : tally.entries())
                    out.emplace_back(e.name, e.passed, e.failed);
            }
            return out;
        },
        py::arg("seed") = 1, py::arg("count") = 20, py::arg("dim") = 4);
}
