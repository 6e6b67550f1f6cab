#ifndef NILORBIT_REPORT_HPP
#define NILORBIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nilorbit/kirillov.hpp"
#include "nilorbit/prolie.hpp"

namespace nilorbit {

/// Reports use the default nlohmann object (keys sorted), carry no
/// timestamps, and serialize rationals as strings, so a fixed
/// (inputs, flags, seed) triple always renders to identical bytes.
using Json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

Json report_skeleton(const std::string& command, std::uint64_t seed,
                     const std::string& inputs_digest);

/// JSON: two-space indented dump. Text: deterministic flat key walk.
std::string render_report(const Json& report, bool json_output);

Json json_ratvec(const RatVec& v);
Json json_basis_rows(const Subspace& s);
Json json_certificate(const PolarizationCertificate& c);
Json json_membership(const MembershipResult& r);
Json json_orbit(const OrbitDescriptor& d);
Json json_checks(const Verdict& v);

} // namespace nilorbit

#endif
