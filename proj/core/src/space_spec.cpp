#include "pihom/space_spec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pihom {

SpaceSpec parse_space_spec(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("space description is not valid JSON: ") + e.what());
    }

    SpaceSpec s;
    try {
        s.model = j.at("model").get<std::string>();
        if (j.contains("rank"))
            s.rank = j.at("rank").get<int>();
        if (j.contains("vertices"))
            s.vertices = j.at("vertices").get<std::vector<std::string>>();
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                GraphEdge ge;
                ge.id = e.at("id").get<std::string>();
                ge.from = e.at("from").get<std::string>();
                ge.to = e.at("to").get<std::string>();
                if (e.contains("inverse_of"))
                    ge.inverse_of = e.at("inverse_of").get<std::string>();
                s.edges.push_back(std::move(ge));
            }
        }
        s.x = j.at("x").get<std::string>();
        s.y = j.at("y").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad space description: ") + e.what());
    }
    return s;
}

SpaceSpec load_space_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open space file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space_spec(buf.str());
}

Model model_from_spec(const SpaceSpec& spec)
{
    if (spec.model == "wedge" || spec.model == "wedge_inv") {
        if (spec.rank <= 0)
            throw input_error("wedge models need a positive rank");
        Model m = spec.model == "wedge" ? wedge_model(spec.rank)
                                        : wedge_inv_model(spec.rank);
        if (spec.x != "v" || spec.y != "v")
            throw input_error("wedge models have the single vertex \"v\"");
        return m;
    }
    if (spec.model == "two_vertex_circle")
        return two_vertex_circle_model(spec.x, spec.y);
    if (spec.model == "custom_graph")
        return custom_graph_model(spec.vertices, spec.edges, spec.x, spec.y);
    throw input_error("unknown model: " + spec.model);
}

}  // namespace pihom
