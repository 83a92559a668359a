#pragma once

#include "hopfgen/base_algebra.hpp"
#include "hopfgen/cocycle.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/verdict.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace hopfgen {

using json = nlohmann::json;

// Malformed input; the message starts with the file and JSON location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Indented JSON with arrays of scalars kept on one line; keys stay sorted.
std::string dump_pretty(const json& j);

json read_json_file(const std::filesystem::path& path);
// Write to a temporary sibling, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

// {dim, basis, mult[i][j][k], unit, comult[i] = [[j,k,"c"],...], counit, antipode[i][k]}
json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const json& j, const std::string& where = "");
HopfAlgebra load_hopf(const std::filesystem::path& path);

// {"kind": "bilinear-form", "values": [["p/q",...],...]}; a bare matrix is also accepted.
json form_to_json(const BilinearForm& a);
BilinearForm bilinear_from_json(const json& j, std::size_t dim, const std::string& where = "");
// {"kind": "linear-form", "values": ["p/q",...]}; a bare vector is also accepted.
json form_to_json(const LinearForm& f);
LinearForm linear_from_json(const json& j, std::size_t dim, const std::string& where = "");

json verdict_to_json(const Verdict& v);
// Properties of the basis only; pair counters and timings depend on cache state.
json stats_to_json(const GroebnerStats& s);
json certificate_to_json(const SubalgebraSpec& spec, const MembershipCertificate& c);
json quotient_to_json(const QuotientRingReport& q);

}  // namespace hopfgen
