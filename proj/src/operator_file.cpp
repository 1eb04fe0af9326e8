#include "fpcore/operator_file.hpp"

#include "fpcore/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fpcore {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    // nlohmann reports the 1-based position just past the offending character.
    const std::size_t stop = byte == 0 ? 0 : std::min(byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

mpq_class rational_value(const json& value, const std::string& where) {
    if (value.is_number_integer()) return mpq_class(value.dump());
    if (value.is_string()) {
        try {
            return Scalar::parse_rational(value.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string, got " + value.dump());
}

Scalar scalar_value(const json& value, Field field, const std::string& where) {
    if (value.is_object()) {
        if (field != Field::Complex) fail(where, "a {re, im} scalar needs field \"gaussian\"");
        for (const auto& [key, _] : value.items())
            if (key != "re" && key != "im") fail(where, "unknown scalar key \"" + key + "\"");
        mpq_class re = value.contains("re") ? rational_value(value["re"], where + "/re") : 0;
        mpq_class im = value.contains("im") ? rational_value(value["im"], where + "/im") : 0;
        return Scalar(re, im);
    }
    return Scalar(rational_value(value, where), field);
}

std::size_t index_value(const json& value, std::size_t bound, const std::string& where) {
    if (!value.is_number_integer()) fail(where, "index must be an integer");
    const auto k = value.get<long long>();
    if (k < 1 || static_cast<unsigned long long>(k) > bound)
        fail(where, "index " + std::to_string(k) + " outside 1.." + std::to_string(bound));
    return static_cast<std::size_t>(k - 1);
}

std::size_t size_value(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) fail(where, std::string("missing \"") + key + "\"");
    const json& v = obj[key];
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(where + "/" + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

ordered_json rational_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return rational_to_string(q);
}

}  // namespace

OperatorFile parse_operator_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix.
        if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + what);
    }

    if (!doc.is_object()) fail("/", "expected a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "name" && key != "field" && key != "ambient" && key != "entries")
            fail("/" + key, "unknown key");
    }

    OperatorFile out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail("/name", "expected a string");
        out.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("field")) fail("/", "missing \"field\"");
    const json& field_text = doc["field"];
    Field field;
    if (field_text == "rational") {
        field = Field::Real;
    } else if (field_text == "gaussian") {
        field = Field::Complex;
    } else {
        fail("/field", "expected \"rational\" or \"gaussian\", got " + field_text.dump());
    }

    if (!doc.contains("ambient") || !doc["ambient"].is_object())
        fail("/ambient", "expected an object");
    const json& amb = doc["ambient"];
    Ambient ambient;
    const json kind = amb.value("kind", json());
    if (kind == "finite") {
        ambient = Ambient::finite(size_value(amb, "dim", "/ambient"));
    } else if (kind == "countable") {
        ambient = Ambient::countable(size_value(amb, "support", "/ambient"));
    } else {
        fail("/ambient/kind", "expected \"finite\" or \"countable\"");
    }

    const std::size_t n = ambient.support;
    Matrix block(n, n, field);
    if (doc.contains("entries")) {
        const json& entries = doc["entries"];
        if (!entries.is_array()) fail("/entries", "expected an array");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const std::string where = "/entries/" + std::to_string(k);
            const json& e = entries[k];
            if (!e.is_array() || e.size() != 3) fail(where, "expected [row, col, scalar]");
            const std::size_t i = index_value(e[0], n, where + "/0");
            const std::size_t j = index_value(e[1], n, where + "/1");
            block(i, j) = scalar_value(e[2], field, where + "/2");
        }
    }
    out.op = Operator(std::move(block), ambient);
    return out;
}

OperatorFile load_operator_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_operator_file(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string format_operator_file(const Operator& op, const std::string& name) {
    ordered_json doc = ordered_json::object();
    if (!name.empty()) doc["name"] = name;
    doc["field"] = std::string(to_string(op.field()));
    if (op.ambient().is_countable()) {
        doc["ambient"] = {{"kind", "countable"}, {"support", op.ambient().support}};
    } else {
        doc["ambient"] = {{"kind", "finite"}, {"dim", op.ambient().support}};
    }
    ordered_json entries = ordered_json::array();
    const Matrix& m = op.block();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& s = m(i, j);
            if (s.is_zero()) continue;
            ordered_json value = op.field() == Field::Complex
                             ? ordered_json{{"re", rational_json(s.re())}, {"im", rational_json(s.im())}}
                             : rational_json(s.re());
            entries.push_back({i + 1, j + 1, std::move(value)});
        }
    }
    doc["entries"] = std::move(entries);

    // One entry per line keeps large operators readable and diffs small.
    std::string out = "{\n";
    bool first = true;
    for (const char* key : {"name", "field", "ambient"}) {
        if (!doc.contains(key)) continue;
        out += first ? "  " : ",\n  ";
        out += ordered_json(key).dump() + ": " + doc[key].dump();
        first = false;
    }
    out += ",\n  \"entries\": [";
    for (std::size_t k = 0; k < doc["entries"].size(); ++k) {
        out += k == 0 ? "\n    " : ",\n    ";
        out += doc["entries"][k].dump();
    }
    out += doc["entries"].empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

}  // namespace fpcore
