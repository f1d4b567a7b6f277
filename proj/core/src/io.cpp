#include "piercing/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace piercing {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

Rational rational_from(const json& j, const std::string& where) {
    if (!j.is_string()) throw InvalidInput(where + ": rationals must be strings like \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

Point point_from(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput(where + ": a point is a [x, y] pair");
    return {rational_from(j[0], where), rational_from(j[1], where)};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

json type_json(const TriangleType& t) { return json::array({t.dirs[0], t.dirs[1], t.dirs[2]}); }

json trace_json(const PiercingResult& r) {
    json trace = json::object();
    if (r.algorithm == "t1") {
        json nodes = json::array();
        for (const auto& n : r.recursion) {
            nodes.push_back({{"depth", n.depth},
                             {"members", n.members},
                             {"type", n.chosen ? type_json(*n.chosen) : json(nullptr)},
                             {"buckets", n.bucket_sizes},
                             {"children", n.children},
                             {"witness", n.witness ? json(*n.witness) : json(nullptr)}});
        }
        trace["nodes"] = std::move(nodes);
    } else {
        json steps = json::array();
        for (const auto& s : r.loop) {
            json step = {{"remaining_before", s.remaining_before},
                         {"slope_index", s.slope_index},
                         {"type", type_json(s.type)},
                         {"case", s.case_number},
                         {"below", s.below_lines},
                         {"emitted", s.emitted}};
            if (s.construction) {
                const auto& c = *s.construction;
                step["construction"] = {{"H", point_json(c.H)},   {"P", point_json(c.P)},
                                        {"chosen_i", c.chosen_i}, {"P_i", point_json(c.P_i)},
                                        {"X", point_json(c.X)},   {"Y", point_json(c.Y)}};
            }
            steps.push_back(std::move(step));
        }
        trace["steps"] = std::move(steps);
        trace["final_witness"] = r.final_witness ? json(*r.final_witness) : json(nullptr);
    }
    return trace;
}

} // namespace

std::string serialize_instance(const Family& f) {
    json normals = json::array();
    for (const auto& d : f.tmpl.normals) normals.push_back({d.a(), d.b()});
    json ref = json::array();
    for (const auto& c : f.tmpl.reference_offsets) ref.push_back(c.to_string());
    json members = json::array();
    for (const auto& m : f.members) {
        json offsets = json::object();
        for (const auto& [j, c] : m.offsets) offsets[std::to_string(j)] = c.to_string();
        members.push_back({{"offsets", std::move(offsets)}});
    }
    json doc = {{"version", kInstanceVersion},
                {"template", {{"normals", std::move(normals)}, {"reference_offsets", std::move(ref)}}},
                {"members", std::move(members)}};
    return doc.dump(2) + "\n";
}

Family parse_instance(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object()) throw InvalidInput("instance must be a JSON object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != kInstanceVersion)
        throw InvalidInput("instance version must be " + std::to_string(kInstanceVersion));
    if (!doc.contains("template") || !doc["template"].is_object()) throw InvalidInput("missing template object");
    const json& tj = doc["template"];
    if (!tj.contains("normals") || !tj["normals"].is_array()) throw InvalidInput("template.normals must be an array");

    Family f;
    for (std::size_t i = 0; i < tj["normals"].size(); ++i) {
        const json& n = tj["normals"][i];
        if (!n.is_array() || n.size() != 2 || !n[0].is_number_integer() || !n[1].is_number_integer())
            throw InvalidInput("template.normals[" + std::to_string(i) + "] must be an [a, b] integer pair");
        f.tmpl.normals.emplace_back(n[0].get<std::int64_t>(), n[1].get<std::int64_t>());
    }
    if (tj.contains("reference_offsets")) {
        if (!tj["reference_offsets"].is_array()) throw InvalidInput("template.reference_offsets must be an array");
        for (std::size_t i = 0; i < tj["reference_offsets"].size(); ++i)
            f.tmpl.reference_offsets.push_back(
                rational_from(tj["reference_offsets"][i], "template.reference_offsets[" + std::to_string(i) + "]"));
    }

    if (!doc.contains("members") || !doc["members"].is_array()) throw InvalidInput("members must be an array");
    for (std::size_t i = 0; i < doc["members"].size(); ++i) {
        const json& mj = doc["members"][i];
        const std::string where = "members[" + std::to_string(i) + "]";
        if (!mj.is_object() || !mj.contains("offsets") || !mj["offsets"].is_object())
            throw InvalidInput(where + " needs an offsets object");
        RelatedPolygon m;
        for (const auto& [key, value] : mj["offsets"].items()) {
            std::size_t idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InvalidInput(where + ": direction key '" + key + "' is not an index");
            }
            m.add(idx, rational_from(value, where + "." + key));
        }
        f.members.push_back(std::move(m));
    }

    auto problems = validate_family(f);
    if (!problems.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw InvalidInput(msg);
    }
    return f;
}

ResultFile make_result_file(const PiercingResult& r, bool verified) {
    ResultFile out;
    out.algorithm = r.algorithm;
    out.points = r.points;
    out.assignment = r.assignment;
    out.bound = r.bound.get_str();
    out.initial_type_count = r.initial_type_count;
    out.verified = verified;
    out.trace = trace_json(r).dump();
    return out;
}

ResultFile make_oracle_file(const OracleResult& r, std::size_t member_count, bool verified) {
    ResultFile out;
    out.algorithm = "oracle";
    out.points = r.witness_points;
    out.assignment.assign(member_count, 0);
    for (std::size_t g = 0; g < r.witness_groups.size(); ++g)
        for (MemberIndex m : r.witness_groups[g]) out.assignment[m] = g;
    out.bound = std::to_string(r.optimum);
    out.verified = verified;
    out.trace = json{{"groups", r.witness_groups}}.dump();
    return out;
}

std::string serialize_result(const ResultFile& r) {
    json points = json::array();
    for (const auto& p : r.points) points.push_back(point_json(p));
    json doc = {{"algorithm", r.algorithm},
                {"points", std::move(points)},
                {"point_count", r.points.size()},
                {"assignment", r.assignment},
                {"bound", r.bound},
                {"initial_type_count", r.initial_type_count},
                {"verified", r.verified},
                {"trace", json::parse(r.trace.empty() ? "{}" : r.trace)}};
    if (r.elapsed_ms) doc["timings"] = {{"elapsed_ms", *r.elapsed_ms}};
    return doc.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
    json doc = parse_json(text);
    ResultFile r;
    try {
        r.algorithm = doc.at("algorithm").get<std::string>();
        r.points = parse_points(text);
        r.assignment = doc.at("assignment").get<std::vector<std::size_t>>();
        r.bound = doc.at("bound").get<std::string>();
        r.initial_type_count = doc.at("initial_type_count").get<std::size_t>();
        r.verified = doc.at("verified").get<bool>();
        r.trace = doc.at("trace").dump();
        if (doc.contains("timings")) r.elapsed_ms = doc["timings"].at("elapsed_ms").get<double>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed result file: ") + e.what());
    }
    return r;
}

std::vector<Point> parse_points(std::string_view text) {
    json doc = parse_json(text);
    const json* arr = &doc;
    if (doc.is_object()) {
        if (!doc.contains("points")) throw InvalidInput("points file has no \"points\" array");
        arr = &doc["points"];
    }
    if (!arr->is_array()) throw InvalidInput("points must be an array");
    std::vector<Point> out;
    for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(point_from((*arr)[i], "points[" + std::to_string(i) + "]"));
    return out;
}

std::string serialize_counterexample(const Family& f, const std::string& algorithm, const ClaimViolation& v) {
    json doc = {{"claim", v.claim()},
                {"detail", v.detail()},
                {"algorithm", algorithm},
                {"instance", json::parse(serialize_instance(f))}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

} // namespace piercing
