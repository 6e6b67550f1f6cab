#include "nilorbit/report.hpp"

#include <sstream>

namespace nilorbit {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

Json report_skeleton(const std::string& command, std::uint64_t seed,
                     const std::string& inputs_digest) {
  Json j;
  j["schema"] = "nilorbit-report/1";
  j["tool_version"] = "0.1.0";
  j["command"] = command;
  j["seed"] = seed;
  j["inputs_digest"] = inputs_digest;
  return j;
}

namespace {

void render_text_walk(const Json& j, const std::string& prefix,
                      std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const std::string path = prefix.empty() ? k : prefix + "." + k;
      render_text_walk(v, path, out);
    }
  } else if (j.is_array()) {
    out << prefix << ": " << j.dump() << "\n";
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

} // namespace

std::string render_report(const Json& report, bool json_output) {
  if (json_output) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text_walk(report, "", out);
  return out.str();
}

Json json_ratvec(const RatVec& v) {
  Json arr = Json::array();
  for (const Rational& c : v) arr.push_back(rat_str(c));
  return arr;
}

Json json_basis_rows(const Subspace& s) {
  Json arr = Json::array();
  for (const RatVec& row : s.basis_rows()) arr.push_back(json_ratvec(row));
  return arr;
}

Json json_certificate(const PolarizationCertificate& c) {
  Json j;
  j["subalgebra"] = c.subalgebra;
  j["subordinated"] = c.subordinated;
  j["dimension_identity"] = c.dimension;
  j["algebra_dim"] = c.algebra_dim;
  j["stabilizer_dim"] = c.stabilizer_dim;
  j["polarization_dim"] = c.polarization_dim;
  j["ok"] = c.ok();
  return j;
}

Json json_membership(const MembershipResult& r) {
  Json j;
  switch (r.status) {
    case MembershipStatus::yes: j["status"] = "yes"; break;
    case MembershipStatus::no: j["status"] = "no"; break;
    case MembershipStatus::indeterminate: j["status"] = "indeterminate"; break;
  }
  if (r.witness) j["witness"] = json_ratvec(r.witness->coords);
  if (r.blocking) {
    j["blocking"]["layer"] = r.blocking->layer;
    j["blocking"]["reason"] = r.blocking->reason;
    j["blocking"]["polynomial"] = r.blocking->polynomial;
  }
  return j;
}

Json json_orbit(const OrbitDescriptor& d) {
  Json j;
  j["algebra"] = d.algebra()->name();
  j["base"] = json_ratvec(d.base().coords);
  j["dimension"] = d.dimension();
  j["stabilizer"] = json_basis_rows(d.stab());
  j["stabilizer_dim"] = d.stab().dim();
  j["jump_indices"] = d.jump_indices();
  return j;
}

Json json_checks(const Verdict& v) {
  Json arr = Json::array();
  for (const CheckResult& c : v.checks) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  Json out;
  out["consistent"] = v.consistent;
  out["checks"] = std::move(arr);
  return out;
}

} // namespace nilorbit
