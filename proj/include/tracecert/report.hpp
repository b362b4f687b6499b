#pragma once

#include "tracecert/eigenspace.hpp"
#include "tracecert/fuzz.hpp"
#include "tracecert/polar.hpp"
#include "tracecert/subspace.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tracecert {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const BoundCheck& check);
Json to_json(const CanonicalAngleSet& angles);
Json to_json(const EigCertificate& cert);
Json to_json(const PolarCertificate& cert);
Json to_json(const FuzzReport& report);
Json to_json(const Tolerances& tol);

struct InputRef {
    std::string path;
    std::string digest;
};

/// {version, command, inputs, tolerances, result, verified}
Json make_envelope(const std::string& command, const std::vector<InputRef>& inputs, const Tolerances& tol,
                   Json result, bool verified);

} // namespace tracecert
