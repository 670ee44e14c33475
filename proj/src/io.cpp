#include "strata/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace strata::io {

using ordered_json = nlohmann::ordered_json;

SpaceDocument document_from_space(const StratifiedSpace& s, int subdivisions) {
    SpaceDocument doc;
    doc.dimension = s.n();
    doc.subdivisions = subdivisions;
    doc.maximal_simplices = s.complex().maximal_simplices();

    // default stratum: the lowest-id stratum of full dimension
    int default_id = -1;
    for (const Stratum& st : s.strata())
        if (st.dim == s.n() && default_id < 0) default_id = st.id;
    if (default_id < 0) throw InputError("space has no stratum of full dimension");

    for (const Stratum& st : s.strata()) {
        SpaceDocument::StratumDecl decl;
        decl.id = st.id;
        decl.dim = st.dim;
        decl.name = st.name;
        if (st.id != default_id) {
            std::vector<Simplex> listed;
            for (int d = 0; d <= s.complex().dim(); ++d)
                for (std::int32_t i = 0; i < s.complex().count(d); ++i)
                    if (s.label(d, i) == st.id) listed.push_back(s.complex().simplices(d)[i]);
            decl.simplices = std::move(listed);
        }
        doc.strata.push_back(std::move(decl));
    }
    std::sort(doc.strata.begin(), doc.strata.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return doc;
}

StratifiedSpace space_from_document(const SpaceDocument& doc) {
    SimplicialComplex k = build_complex(doc.maximal_simplices);
    int default_id = -1;
    for (const auto& decl : doc.strata) {
        if (!decl.simplices.has_value()) {
            if (default_id >= 0)
                throw InputError("space file: more than one stratum without a simplex list");
            if (decl.dim != doc.dimension)
                throw InputError("space file: the default stratum must have dim == dimension");
            default_id = decl.id;
        }
    }
    if (default_id < 0)
        throw InputError("space file: exactly one stratum must omit its simplex list "
                         "(the default top stratum)");
    std::vector<std::vector<int>> labels(static_cast<std::size_t>(k.dim()) + 1);
    for (int d = 0; d <= k.dim(); ++d) labels[d].assign(k.count(d), default_id);
    for (const auto& decl : doc.strata) {
        if (!decl.simplices) continue;
        for (const Simplex& raw : *decl.simplices) {
            Simplex s = raw;
            std::sort(s.begin(), s.end());
            const int d = static_cast<int>(s.size()) - 1;
            const std::int32_t idx = k.index_of(s);
            if (idx < 0)
                throw InputError("space file: stratum '" + decl.name +
                                 "' lists a simplex that is not in the complex");
            labels[d][idx] = decl.id;
        }
    }
    std::vector<Stratum> strata;
    for (const auto& decl : doc.strata) strata.push_back(Stratum{decl.id, decl.dim, decl.name});
    return stratify(std::move(k), std::move(labels), doc.dimension, std::move(strata));
}

namespace {

std::string json_string(const std::string& s) { return ordered_json(s).dump(); }

std::string simplex_line(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

std::string simplex_block(const std::vector<Simplex>& ss, const std::string& indent) {
    if (ss.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < ss.size(); ++i) {
        out += indent + "  " + simplex_line(ss[i]);
        out += (i + 1 < ss.size()) ? ",\n" : "\n";
    }
    return out + indent + "]";
}

std::vector<Simplex> simplices_from_json(const ordered_json& arr, const char* what) {
    if (!arr.is_array()) throw InputError(std::string("space file: ") + what + " must be a list");
    std::vector<Simplex> out;
    for (const auto& item : arr) {
        if (!item.is_array()) throw InputError(std::string("space file: ") + what +
                                               " entries must be lists of vertex ids");
        Simplex s;
        for (const auto& v : item) s.push_back(v.get<VertexId>());
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::string write_space_json(const SpaceDocument& doc) {
    // hand-rolled canonical rendering: one simplex per line, strata by id
    std::string out = "{\n";
    out += "  \"dimension\": " + std::to_string(doc.dimension) + ",\n";
    std::vector<Simplex> maximal = doc.maximal_simplices;
    std::sort(maximal.begin(), maximal.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    out += "  \"maximal_simplices\": " + simplex_block(maximal, "  ") + ",\n";
    std::vector<SpaceDocument::StratumDecl> strata = doc.strata;
    std::sort(strata.begin(), strata.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    out += "  \"strata\": [\n";
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const auto& decl = strata[i];
        out += "    {\"id\": " + std::to_string(decl.id) +
               ", \"dim\": " + std::to_string(decl.dim) + ", \"name\": " +
               json_string(decl.name);
        if (decl.simplices) {
            std::vector<Simplex> listed = *decl.simplices;
            std::sort(listed.begin(), listed.end(), [](const Simplex& a, const Simplex& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            out += ", \"simplices\": " + simplex_block(listed, "    ");
        }
        out += "}";
        out += (i + 1 < strata.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"subdivisions\": " + std::to_string(doc.subdivisions) + "\n";
    return out + "}\n";
}

SpaceDocument parse_space_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("space file: invalid JSON: ") + e.what());
    }
    SpaceDocument doc;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw InputError("space file: missing integer field 'dimension'");
    doc.dimension = j["dimension"].get<int>();
    if (!j.contains("maximal_simplices"))
        throw InputError("space file: missing field 'maximal_simplices'");
    doc.maximal_simplices = simplices_from_json(j["maximal_simplices"], "maximal_simplices");
    if (j.contains("strata")) {
        for (const auto& sj : j["strata"]) {
            SpaceDocument::StratumDecl decl;
            if (!sj.contains("id") || !sj.contains("dim"))
                throw InputError("space file: each stratum needs 'id' and 'dim'");
            decl.id = sj["id"].get<int>();
            decl.dim = sj["dim"].get<int>();
            decl.name = sj.value("name", std::string("stratum-") + std::to_string(decl.id));
            if (sj.contains("simplices"))
                decl.simplices = simplices_from_json(sj["simplices"], "stratum simplices");
            doc.strata.push_back(std::move(decl));
        }
    }
    if (doc.strata.empty()) {
        // a bare complex: single default stratum
        doc.strata.push_back(SpaceDocument::StratumDecl{0, doc.dimension, "regular", std::nullopt});
    }
    doc.subdivisions = j.value("subdivisions", 0);
    return doc;
}

std::string write_zeros_json(const ZerosDocument& doc) {
    std::string out = "{\n";
    if (!doc.field_class.empty())
        out += "  \"field_class\": " + json_string(doc.field_class) + ",\n";
    out += "  \"zeros\": [\n";
    for (std::size_t i = 0; i < doc.zeros.size(); ++i) {
        const ZeroDatum& z = doc.zeros[i];
        out += "    {\"stratum\": " + std::to_string(z.stratum_id) +
               ", \"component\": " + std::to_string(z.component) +
               ", \"index\": " + std::to_string(z.index);
        if (!z.label.empty()) out += ", \"label\": " + json_string(z.label);
        out += "}";
        out += (i + 1 < doc.zeros.size()) ? ",\n" : "\n";
    }
    return out + "  ]\n}\n";
}

ZerosDocument parse_zeros_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("zeros file: invalid JSON: ") + e.what());
    }
    ZerosDocument doc;
    doc.field_class = j.value("field_class", std::string());
    if (!j.contains("zeros") || !j["zeros"].is_array())
        throw InputError("zeros file: missing list field 'zeros'");
    for (const auto& zj : j["zeros"]) {
        ZeroDatum z;
        if (!zj.contains("stratum")) throw InputError("zeros file: zero without 'stratum'");
        z.stratum_id = zj["stratum"].get<int>();
        z.component = zj.value("component", 0);
        z.index = zj.value("index", std::int64_t(1));
        z.label = zj.value("label", std::string());
        doc.zeros.push_back(std::move(z));
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << content;
}

} // namespace strata::io
