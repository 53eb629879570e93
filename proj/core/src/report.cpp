#include "pihom/report.hpp"

#include <sstream>

namespace pihom {

bool RunReport::all_pass() const
{
    for (const CheckRecord& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void RunReport::add_check(std::string name, std::string params, std::string expected,
                          std::string got, bool pass)
{
    checks.push_back(CheckRecord{std::move(name), std::move(params),
                                 std::move(expected), std::move(got), pass});
}

ordered_json RunReport::to_json(bool include_timing) const
{
    ordered_json j;
    j["command"] = command;
    j["space"] = space;
    j["params"] = params;
    ordered_json cs = ordered_json::array();
    for (const CheckRecord& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["params"] = c.params;
        e["expected"] = c.expected;
        e["got"] = c.got;
        e["pass"] = c.pass;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["tables"] = tables;
    j["matrices"] = matrices;
    if (include_timing)
        j["timing_ms"] = timing_ms;
    return j;
}

std::string RunReport::to_tsv(bool include_timing) const
{
    std::ostringstream os;
    os << "# command\t" << command << "\tspace\t" << space;
    for (const auto& [k, v] : params.items())
        os << "\t" << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& [tname, table] : tables.items()) {
        os << "table\t" << tname << "\n";
        for (const auto& row : table) {
            os << "row";
            for (const auto& cell : row)
                os << "\t" << (cell.is_string() ? cell.get<std::string>() : cell.dump());
            os << "\n";
        }
    }
    for (const CheckRecord& c : checks)
        os << "check\t" << c.name << "\t" << c.params << "\texpected\t" << c.expected
           << "\tgot\t" << c.got << "\t" << (c.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [mname, m] : matrices.items())
        os << "matrix\t" << mname << "\t" << m.dump() << "\n";
    if (include_timing)
        os << "# timing_ms\t" << timing_ms << "\n";
    return os.str();
}

ordered_json matrix_to_json(const QMatrix& m)
{
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            entries.push_back(ordered_json::array({r, c, v.get_str()}));
    j["entries"] = std::move(entries);
    return j;
}

ordered_json vector_to_json(const QVec& v)
{
    ordered_json a = ordered_json::array();
    for (const Rat& x : v)
        a.push_back(x.get_str());
    return a;
}

}  // namespace pihom
