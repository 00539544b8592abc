#pragma once

#include <json.hpp>

#include <string>

#include "updyn/certify.hpp"
#include "updyn/interval.hpp"

namespace updyn {

using Json = nlohmann::ordered_json;

// Envelope for every CLI result. All numerics inside are exact strings
// ("p/2^q" dyadics, "num/den" rationals), so serialize/parse round-trips
// bit for bit and certificates can be re-verified from the document alone.
struct ReportDocument {
    std::string schema_version = "1";
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();

    std::string serialize(int indent = 2) const;
    static ReportDocument parse(const std::string& text);

    bool operator==(const ReportDocument& o) const {
        return schema_version == o.schema_version && command == o.command && parameters == o.parameters &&
               results == o.results;
    }
};

// Value serializers shared by the CLI and the tests.
Json json_of(const Dyadic& d);                 // "p/2^q"
Json json_of(const Rational& r);               // "num/den"
Json json_of(const RatInterval& v);            // {lo, hi}
Json json_of(const Box2& b);                   // {x, y}
Json json_of(const CertificateEntry& e);
Json json_of(const UnpredictabilityCertificate& c);
Json json_of(const PoissonEntry& e);
Json json_of(const DensityReport& r);

// Bi-infinite symbol window: {offset, symbols, dot_position} with
// dot_position the number of symbols preceding index 0 (absent when index 0
// is outside the window).
Json window_json(const Integer& start, const std::string& symbols, bool bi_infinite);

}  // namespace updyn
