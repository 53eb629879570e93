#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pihom/qmatrix.hpp"

namespace pihom {

using ordered_json = nlohmann::ordered_json;

struct CheckRecord {
    std::string name;
    std::string params;
    std::string expected;
    std::string got;
    bool pass = false;
};

// Deterministic run record: same inputs give byte-identical serializations
// once the timing field is excluded.
struct RunReport {
    std::string command;
    std::string space;
    ordered_json params = ordered_json::object();
    std::vector<CheckRecord> checks;
    ordered_json tables = ordered_json::object();
    ordered_json matrices = ordered_json::object();
    double timing_ms = 0.0;

    bool all_pass() const;
    void add_check(std::string name, std::string params, std::string expected,
                   std::string got, bool pass);

    ordered_json to_json(bool include_timing = true) const;
    std::string to_tsv(bool include_timing = true) const;
};

ordered_json matrix_to_json(const QMatrix& m);
ordered_json vector_to_json(const QVec& v);

}  // namespace pihom
