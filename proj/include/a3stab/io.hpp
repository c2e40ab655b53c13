#pragma once

#include "a3stab/atlas.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3stab {

using json = nlohmann::json;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "a+bi", "a-bi", "bi", "i", "-i", "a", spaces allowed.
std::complex<double> parse_complex(const std::string& s);
/// Three comma separated complex numbers.
CentralCharge parse_charge(const std::string& s);
std::string format_complex(std::complex<double> z);

/// {"resolution": n, "points": [[{re,im},{re,im},{re,im}], ...]} or a bare array.
ChargePath path_from_json(const json& j);
json path_to_json(const ChargePath& p);

json to_json(const StabPoint& p);
StabPoint point_from_json(const json& j);
json to_json(const Lift& l);
json to_json(const LiftTrace& t);
LiftTrace trace_from_json(const json& j);
std::string trace_csv(const LiftTrace& t);

// ---- tables ----

std::filesystem::path reference_dir();
json load_reference(const std::string& name);  // e.g. "table1.json"

/// Inequality for a finite facet, written with object names, e.g. "S3<S123-1".
std::string inequality(const ChartSpec& c, const Facet& f);

json table_exc();    // collections with least Hom degrees and type
json table_alpha();  // alpha entries, null for +infinity
json table_ineq();   // inequality strings per pair
json mutation_graph_json();
std::string mutation_graph_dot();

/// Facet configurations read from the boundary table; with use_errata the
/// corrected bands replace the transcribed ones where an erratum is recorded.
std::vector<FacetConfig> facet_configs(const json& table3, bool use_errata = true);
json table_facets(int samples, std::uint64_t seed);

/// Rows of the csv flattening of a table document.
std::string table_csv(const json& table);

/// Mismatch descriptions; empty when the computed table agrees.
std::vector<std::string> diff_exc(const json& expected);
std::vector<std::string> diff_alpha_ineq(const json& expected);
std::vector<std::string> diff_graph(const json& expected);
std::vector<std::string> diff_facets(const json& expected, int samples, std::uint64_t seed);

// ---- pictures ----

/// Rays of the six interval charges, labelled, in the style of the ray diagrams.
std::string svg_rays(const CentralCharge& z);
/// Chart timeline over [0,1] with a marker at every crossing.
std::string svg_timeline(const LiftTrace& t);

}  // namespace a3stab
