#include "hermix/document.hpp"

#include "hermix/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hermix {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorCode::ParseError, message);
}

std::string position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::size_t read_count(const json& value, const std::string& field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        fail("field '" + field + "': expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

std::vector<Edge> read_pairs(const json& value, const std::string& field) {
    if (!value.is_array()) fail("field '" + field + "': expected an array of vertex pairs");
    std::vector<Edge> pairs;
    for (std::size_t k = 0; k < value.size(); ++k) {
        const json& item = value[k];
        const std::string where = field + "[" + std::to_string(k) + "]";
        if (!item.is_array() || item.size() != 2) fail("field '" + where + "': expected a pair [u, v]");
        pairs.push_back({read_count(item[0], where), read_count(item[1], where)});
    }
    return pairs;
}

void append_pairs(std::ostringstream& out, const std::vector<Edge>& pairs) {
    out << '[';
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k > 0) out << ", ";
        out << '[' << pairs[k].u << ", " << pairs[k].v << ']';
    }
    out << ']';
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail("malformed document at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!root.is_object()) fail("document must be an object");

    GraphDocument doc;
    bool has_n = false;
    for (const auto& [key, value] : root.items()) {
        if (key == "n") {
            doc.n = read_count(value, key);
            has_n = true;
        } else if (key == "labels") {
            if (!value.is_array()) fail("field 'labels': expected an array of strings");
            for (const json& label : value) {
                if (!label.is_string()) fail("field 'labels': expected an array of strings");
                doc.labels.push_back(label.get<std::string>());
            }
        } else if (key == "digons") {
            doc.digons = read_pairs(value, key);
        } else if (key == "arcs") {
            doc.arcs = read_pairs(value, key);
        } else if (key == "alpha_order") {
            const std::size_t order = read_count(value, key);
            if (order < 1) fail("field 'alpha_order': must be >= 1");
            doc.alpha_order = static_cast<unsigned>(order);
        } else {
            fail("unknown field '" + key + "'");
        }
    }
    if (!has_n) fail("missing field 'n'");
    if (!doc.labels.empty() && doc.labels.size() != doc.n) {
        fail("field 'labels': expected " + std::to_string(doc.n) + " names, got " + std::to_string(doc.labels.size()));
    }
    to_graph(doc);
    return doc;
}

GraphDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string render_document(const GraphDocument& doc) {
    std::ostringstream out;
    out << "{\n  \"n\": " << doc.n << ",\n";
    if (!doc.labels.empty()) {
        out << "  \"labels\": [";
        for (std::size_t k = 0; k < doc.labels.size(); ++k) {
            if (k > 0) out << ", ";
            out << json(doc.labels[k]).dump();
        }
        out << "],\n";
    }
    out << "  \"digons\": ";
    append_pairs(out, doc.digons);
    out << ",\n  \"arcs\": ";
    append_pairs(out, doc.arcs);
    out << ",\n  \"alpha_order\": " << doc.alpha_order << "\n}\n";
    return out.str();
}

MixedGraph to_graph(const GraphDocument& doc) {
    return build_graph(doc.n, doc.digons, doc.arcs);
}

GraphDocument document_from_graph(const MixedGraph& graph, unsigned alpha_order) {
    GraphDocument doc;
    doc.n = graph.vertex_count();
    doc.digons = graph.digons();
    doc.arcs = graph.arcs();
    doc.alpha_order = alpha_order;
    return doc;
}

}  // namespace hermix
