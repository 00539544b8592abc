#include "updyn/report.hpp"

#include <stdexcept>

namespace updyn {

std::string ReportDocument::serialize(int indent) const {
    Json doc = Json::object();
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["results"] = results;
    return doc.dump(indent) + "\n";
}

ReportDocument ReportDocument::parse(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw std::invalid_argument("malformed report document");
    ReportDocument out;
    if (!doc.contains("schema_version") || !doc["schema_version"].is_string())
        throw std::invalid_argument("report lacks a schema_version");
    out.schema_version = doc["schema_version"].get<std::string>();
    out.command = doc.value("command", "");
    out.parameters = doc.value("parameters", Json::object());
    out.results = doc.value("results", Json::object());
    return out;
}

Json json_of(const Dyadic& d) { return d.str(); }

Json json_of(const Rational& r) { return to_decimal(r); }

Json json_of(const RatInterval& v) {
    Json j = Json::object();
    j["lo"] = json_of(v.lo());
    j["hi"] = json_of(v.hi());
    return j;
}

Json json_of(const Box2& b) {
    Json j = Json::object();
    j["x"] = json_of(b.x);
    j["y"] = json_of(b.y);
    return j;
}

Json json_of(const CertificateEntry& e) {
    Json j = Json::object();
    j["n"] = e.depth;
    j["t"] = to_decimal(e.return_time);
    j["tau"] = to_decimal(e.separation_time);
    j["proximity_bound"] = json_of(e.proximity_bound);
    j["separation_verified"] = e.separation_verified;
    return j;
}

Json json_of(const UnpredictabilityCertificate& c) {
    Json j = Json::object();
    j["space"] = to_string(c.kind);
    j["subject"] = c.subject;
    j["epsilon0"] = json_of(c.epsilon0);
    j["all_verified"] = c.all_verified();
    Json entries = Json::array();
    for (const auto& e : c.entries) entries.push_back(json_of(e));
    j["entries"] = entries;
    return j;
}

Json json_of(const PoissonEntry& e) {
    Json j = Json::object();
    j["n"] = e.depth;
    j["t"] = to_decimal(e.time);
    j["proximity_bound"] = json_of(e.proximity_bound);
    return j;
}

Json json_of(const DensityReport& r) {
    Json j = Json::object();
    j["space"] = to_string(r.kind);
    j["window"] = r.window;
    j["all_found"] = r.all_found;
    Json hits = Json::array();
    for (const auto& h : r.hits) {
        Json e = Json::object();
        e["word"] = h.word.str();
        e["shift"] = to_decimal(h.shift_right);
        if (h.shift_left) e["shift_left"] = to_decimal(*h.shift_left);
        e["verified"] = h.verified;
        hits.push_back(e);
    }
    j["hits"] = hits;
    return j;
}

Json window_json(const Integer& start, const std::string& symbols, bool bi_infinite) {
    Json j = Json::object();
    j["offset"] = to_decimal(start);
    j["symbols"] = symbols;
    if (bi_infinite && start <= 0 && start + static_cast<long>(symbols.size()) > 0)
        j["dot_position"] = static_cast<long>(-start.get_si());
    return j;
}

}  // namespace updyn
