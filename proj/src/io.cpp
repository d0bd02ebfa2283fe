#include "ctr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

#include "json.hpp"

namespace ctr {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

double get_number(const nlohmann::json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(path + ": missing or non-numeric field \"" + key + "\"");
    return j[key].get<double>();
}

}  // namespace

ChannelInput parse_channel_file(const std::string& path, bool swap_users) {
    const nlohmann::json j = load_json(path);
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw std::invalid_argument(path + ": channel file needs a string \"type\" field");
    const std::string type = j["type"].get<std::string>();
    if (type == "gbc") {
        GbcChannel ch{get_number(j, "h1", path), get_number(j, "h2", path),
                      get_number(j, "P", path)};
        if (swap_users) std::swap(ch.h1, ch.h2);
        validate(ch);
        return ch;
    }
    if (type == "gic") {
        GicChannel ch{get_number(j, "a", path), get_number(j, "b", path),
                      get_number(j, "P1", path), get_number(j, "P2", path)};
        if (swap_users) {
            std::swap(ch.a, ch.b);
            std::swap(ch.P1, ch.P2);
        }
        validate(ch);
        return ch;
    }
    throw std::invalid_argument(path + ": unknown channel type \"" + type + "\"");
}

std::vector<RatePair> parse_polygon_file(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument(path + ": polygon file needs a \"points\" array");
    std::vector<RatePair> points;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw std::invalid_argument(path + ": each point must be [r1, r2]");
        points.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return points;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string json_pair(double x, double y) {
    return "[" + json_number(x) + "," + json_number(y) + "]";
}

std::string subregion_to_json(const ConvexCTSubregion& sub) {
    std::string out = "{\"side\":" + std::to_string(sub.side()) + ",\"vertices\":[";
    for (std::size_t i = 0; i < sub.vertices().size(); ++i) {
        if (i) out += ",";
        out += json_pair(sub.vertices()[i].d1, sub.vertices()[i].d2);
    }
    const Ray ar = sub.axis_ray();
    const Ray dr = sub.diag_ray();
    out += "],\"rays\":[";
    out += "{\"base\":" + json_pair(ar.base.d1, ar.base.d2) + ",\"dir\":" +
           json_pair(ar.dx, ar.dy) + "},";
    out += "{\"base\":" + json_pair(dr.base.d1, dr.base.d2) + ",\"dir\":" +
           json_pair(dr.dx, dr.dy) + "}";
    out += "]}";
    return out;
}

}  // namespace

std::string ctr_to_json(const CTRegion& ctr) {
    std::string out = "{\"tag\":\"";
    out += to_string(ctr.tag);
    out += "\",\"sub1\":" + subregion_to_json(ctr.sub1);
    out += ",\"sub2\":" + subregion_to_json(ctr.sub2);
    out += "}\n";
    return out;
}

std::string solver_result_to_json(const SolverResult& r) {
    std::string out = "{\"minimizer_rate\":" + json_pair(r.minimizer_rate.r1, r.minimizer_rate.r2);
    out += ",\"minimizer_ct\":" + json_pair(r.minimizer_ct.d1, r.minimizer_ct.d2);
    out += ",\"objective\":" + json_number(r.objective);
    out += ",\"side\":" + std::to_string(r.side);
    out += ",\"weight_interval\":" + json_pair(r.weight_interval.lo, r.weight_interval.hi);
    out += "}\n";
    return out;
}

std::string report_to_json(const CompareReport& rep) {
    std::string out = "{\"pass\":";
    out += rep.pass ? "true" : "false";
    out += ",\"counts\":{\"both\":" + std::to_string(rep.both);
    out += ",\"neither\":" + std::to_string(rep.neither);
    out += ",\"analytic_only\":" + std::to_string(rep.analytic_only);
    out += ",\"oracle_only\":" + std::to_string(rep.oracle_only);
    out += ",\"boundary_band\":" + std::to_string(rep.boundary_band);
    out += "},\"worst_distance\":{\"analytic_only\":" + json_number(rep.worst_analytic_only);
    out += ",\"oracle_only\":" + json_number(rep.worst_oracle_only);
    out += "},\"grid\":{\"n\":" + std::to_string(rep.n);
    out += ",\"box\":[" + json_number(rep.box.d1_lo) + "," + json_number(rep.box.d1_hi) + "," +
           json_number(rep.box.d2_lo) + "," + json_number(rep.box.d2_hi) + "]}}\n";
    return out;
}

std::string certificate_to_json(const NonconvexityCertificate& cert) {
    std::string out = "{\"w1_at_c\":" + json_number(cert.w1_at_c);
    out += ",\"w2_at_c\":" + json_number(cert.w2_at_c);
    out += ",\"s1\":" + json_number(cert.s1);
    out += ",\"s2\":" + json_number(cert.s2);
    out += ",\"s2_unbounded\":";
    out += cert.s2_unbounded ? "true" : "false";
    out += ",\"nonconvex\":";
    out += cert.nonconvex ? "true" : "false";
    out += "}\n";
    return out;
}

std::string boundary_to_csv(const std::vector<CompletionTimePair>& points) {
    std::string out = "d1,d2\n";
    for (const CompletionTimePair& p : points) {
        out += json_number(p.d1);
        out += ",";
        out += json_number(p.d2);
        out += "\n";
    }
    return out;
}

std::string ctr_to_svg(const CTRegion& ctr, std::size_t samples) {
    const std::vector<CompletionTimePair> pts = ctr_boundary(ctr, std::max<std::size_t>(samples, 2));
    double hi = 1.0;
    for (const CompletionTimePair& p : pts) hi = std::max({hi, p.d1, p.d2});
    hi *= 1.05;
    const double w = 600.0;
    auto X = [&](double d1) { return d1 / hi * w; };
    auto Y = [&](double d2) { return w - d2 / hi * w; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\">\n";
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) svg += " ";
        svg += json_number(X(pts[i].d1)) + "," + json_number(Y(pts[i].d2));
    }
    svg += "\"/>\n";
    for (const Ray& r : {ctr.sub1.axis_ray(), ctr.sub1.diag_ray(), ctr.sub2.axis_ray()}) {
        const double len = 2.0 * hi;
        svg += "<line stroke=\"gray\" stroke-dasharray=\"4 3\" x1=\"" + json_number(X(r.base.d1)) +
               "\" y1=\"" + json_number(Y(r.base.d2)) + "\" x2=\"" +
               json_number(X(r.base.d1 + r.dx * len)) + "\" y2=\"" +
               json_number(Y(r.base.d2 + r.dy * len)) + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " into place");
}

}  // namespace ctr
