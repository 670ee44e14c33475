#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/hopf.hpp"
#include "strata/stratified.hpp"

namespace strata::io {

/// On-disk description of a stratified space. Simplices not listed under any
/// stratum belong to the unique default stratum (the one without a simplex
/// list, which must have dim == dimension).
struct SpaceDocument {
    int dimension = 0;
    std::vector<Simplex> maximal_simplices;
    struct StratumDecl {
        int id = 0;
        int dim = 0;
        std::string name;
        std::optional<std::vector<Simplex>> simplices;
    };
    std::vector<StratumDecl> strata;
    int subdivisions = 0;
};

SpaceDocument document_from_space(const StratifiedSpace& s, int subdivisions = 0);
StratifiedSpace space_from_document(const SpaceDocument& doc);

/// Canonical JSON rendering: fixed key order, strata sorted by id, simplices
/// in (dim, lex) order. Byte-for-byte reproducible.
std::string write_space_json(const SpaceDocument& doc);
SpaceDocument parse_space_json(const std::string& text);

struct ZerosDocument {
    std::string field_class; // trusted metadata, uninterpreted
    std::vector<ZeroDatum> zeros;
};

std::string write_zeros_json(const ZerosDocument& doc);
ZerosDocument parse_zeros_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace strata::io
