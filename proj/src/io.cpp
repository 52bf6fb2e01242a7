#include "psibeta/io.hpp"

#include "psibeta/error.hpp"

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace psibeta {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw Error(ErrorKind::Parse, field + ": " + why);
}

double parse_number(std::string_view field, std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        fail(std::string(field), "expected a number, got '" + s + "'");
    }
    if (used != s.size())
        fail(std::string(field), "trailing characters in '" + s + "'");
    return value;
}

// "kind:key=value" or "kind:value"; returns the value text.
std::string_view parameter(std::string_view field, std::string_view body, std::string_view key) {
    if (const auto eq = body.find('='); eq != std::string_view::npos) {
        if (body.substr(0, eq) != key)
            fail(std::string(field), "expected parameter '" + std::string(key) + "', got '" + std::string(body.substr(0, eq)) + "'");
        return body.substr(eq + 1);
    }
    return body;
}

json parse_json(std::string_view field, std::string_view document) {
    try {
        return json::parse(document);
    } catch (const json::exception& e) {
        fail(std::string(field), std::string("malformed document: ") + e.what());
    }
}

std::vector<double> number_list(std::string_view field, const json& node) {
    if (!node.is_array())
        fail(std::string(field), "expected an array of numbers");
    std::vector<double> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number())
            fail(std::string(field) + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(node[i].get<double>());
    }
    return out;
}

double number_field(std::string_view field, const json& node) {
    if (!node.is_number())
        fail(std::string(field), "expected a number");
    return node.get<double>();
}

template <class T, class Build> T guarded(std::string_view field, Build&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse)
            throw;
        fail(std::string(field), e.what());
    }
}

std::string read_field_file(const std::string& field, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(field, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string read_text_file(const std::string& path) { return read_field_file("file", path); }

PsiSequence psi_from_json(std::string_view document) {
    const json doc = parse_json("psi", document);
    if (!doc.is_object() || !doc.contains("values"))
        fail("psi.values", "missing");
    auto values = number_list("psi.values", doc["values"]);
    ExplicitTail tail = ZeroTail{};
    if (doc.contains("tail")) {
        const json& t = doc["tail"];
        if (!t.is_object() || !t.contains("kind") || !t["kind"].is_string())
            fail("psi.tail.kind", "missing");
        const auto kind = t["kind"].get<std::string>();
        if (kind == "geometric") {
            if (!t.contains("q"))
                fail("psi.tail.q", "missing");
            const double q = number_field("psi.tail.q", t["q"]);
            const double scale = t.contains("scale") ? number_field("psi.tail.scale", t["scale"]) : 1.0;
            tail = GeometricTail{q, scale};
        } else if (kind != "zero") {
            fail("psi.tail.kind", "expected 'zero' or 'geometric', got '" + kind + "'");
        }
    }
    return guarded<PsiSequence>("psi", [&] { return PsiSequence(ExplicitPsi{std::move(values), tail}); });
}

BetaSequence beta_from_json(std::string_view document) {
    const json doc = parse_json("beta", document);
    if (!doc.is_object() || !doc.contains("values"))
        fail("beta.values", "missing");
    auto values = number_list("beta.values", doc["values"]);
    const double fallback = doc.contains("default") ? number_field("beta.default", doc["default"]) : 0.0;
    return guarded<BetaSequence>("beta", [&] { return BetaSequence(ExplicitBeta{std::move(values), fallback}); });
}

PsiSequence parse_psi(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        fail("psi", "expected 'geometric:q=..', 'power:r=..' or 'file:<path>', got '" + std::string(text) + "'");
    const auto kind = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (kind == "file")
        return psi_from_json(read_field_file("psi.file", std::string(body)));
    if (kind == "geometric") {
        const double q = parse_number("psi.q", parameter("psi", body, "q"));
        return guarded<PsiSequence>("psi.q", [&] { return PsiSequence::geometric(q); });
    }
    if (kind == "power") {
        const double r = parse_number("psi.r", parameter("psi", body, "r"));
        return guarded<PsiSequence>("psi.r", [&] { return PsiSequence::power_law(r); });
    }
    fail("psi", "unknown sequence kind '" + std::string(kind) + "'");
}

BetaSequence parse_beta(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        fail("beta", "expected 'const:..', 'linear:c=..' or 'file:<path>', got '" + std::string(text) + "'");
    const auto kind = text.substr(0, colon);
    const auto body = text.substr(colon + 1);
    if (kind == "file")
        return beta_from_json(read_field_file("beta.file", std::string(body)));
    if (kind == "const") {
        const double b = parse_number("beta", parameter("beta", body, "b"));
        return guarded<BetaSequence>("beta", [&] { return BetaSequence::constant(b); });
    }
    if (kind == "linear") {
        const double c = parse_number("beta.c", parameter("beta", body, "c"));
        return guarded<BetaSequence>("beta.c", [&] { return BetaSequence::linear(c); });
    }
    fail("beta", "unknown sequence kind '" + std::string(kind) + "'");
}

TriangularMethod method_from_json(std::string_view document) {
    const json doc = parse_json("method", document);
    if (!doc.is_object())
        fail("method", "expected an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
        fail("method.n", "expected a nonnegative integer");
    if (!doc.contains("lambda"))
        fail("method.lambda", "missing");
    if (!doc.contains("mu"))
        fail("method.mu", "missing");
    TriangularMethod m{doc["n"].get<std::size_t>(), number_list("method.lambda", doc["lambda"]),
                       number_list("method.mu", doc["mu"])};
    if (auto violation = triangular_validate(m))
        fail("method", violation->message + " (index " + std::to_string(violation->index) + ")");
    return m;
}

TriangularMethod parse_method(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && (text[start] == ' ' || text[start] == '\t' || text[start] == '\n'))
        ++start;
    if (start < text.size() && text[start] == '{')
        return method_from_json(text);
    std::string path(text);
    if (path.rfind("file:", 0) == 0)
        path = path.substr(5);
    return method_from_json(read_field_file("method.file", path));
}

std::string method_to_json(const TriangularMethod& method) {
    json doc;
    doc["n"] = method.n;
    doc["lambda"] = method.lambda;
    doc["mu"] = method.mu;
    return doc.dump();
}

} // namespace psibeta
