#include "a3stab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>

namespace a3stab {

namespace {

// Drops whitespace; inside a number it is only allowed next to a sign.
std::string strip(const std::string& s) {
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto sign = [](char c) { return c == '+' || c == '-'; };
  std::string out;
  for (size_t k = 0; k < s.size(); ++k) {
    if (!space(s[k])) {
      out += s[k];
      continue;
    }
    size_t next = k;
    while (next < s.size() && space(s[next])) ++next;
    const bool edge = out.empty() || next == s.size();
    if (!edge && !sign(out.back()) && !sign(s[next])) throw InputError("bad complex number: '" + s + "'");
    k = next - 1;
  }
  return out;
}

double parse_real(const std::string& s, const std::string& whole) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("bad complex number: '" + whole + "'");
  }
  if (used != s.size()) throw InputError("bad complex number: '" + whole + "'");
  return v;
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(prec) << v;
  return o.str();
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw InputError("empty complex number");
  // split into signed terms; a sign right after an exponent marker stays
  std::vector<std::string> terms;
  std::string cur;
  for (size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if ((c == '+' || c == '-') && k > 0 && s[k - 1] != 'e' && s[k - 1] != 'E') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += c;
  }
  terms.push_back(cur);
  if (terms.size() > 2) throw InputError("bad complex number: '" + text + "'");
  std::complex<double> z = 0;
  bool seen_re = false, seen_im = false;
  for (const auto& t : terms) {
    if (t.empty() || t == "+" || t == "-") throw InputError("bad complex number: '" + text + "'");
    if (t.back() == 'i' || t.back() == 'j') {
      if (seen_im) throw InputError("bad complex number: '" + text + "'");
      seen_im = true;
      std::string coef = t.substr(0, t.size() - 1);
      if (coef.empty() || coef == "+") coef = "1";
      if (coef == "-") coef = "-1";
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      z += std::complex<double>(0, parse_real(coef, text));
    } else {
      if (seen_re) throw InputError("bad complex number: '" + text + "'");
      seen_re = true;
      z += parse_real(t, text);
    }
  }
  return z;
}

CentralCharge parse_charge(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("a charge needs three comma separated values: '" + s + "'");
  return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream o;
  o << std::setprecision(6) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return o.str();
}

namespace {

std::complex<double> complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() || !j["im"].is_number())
    throw InputError("complex values are objects with numeric re and im");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

json complex_to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

ChargePath path_from_json(const json& j) {
  ChargePath p;
  const json* pts = &j;
  if (j.is_object()) {
    if (!j.contains("points")) throw InputError("path object needs a points array");
    pts = &j["points"];
    if (j.contains("resolution")) {
      if (!j["resolution"].is_number_integer() || j["resolution"].get<int>() <= 0)
        throw InputError("resolution must be a positive integer");
      p.resolution = j["resolution"].get<int>();
    }
  }
  if (!pts->is_array() || pts->size() < 2) throw InputError("a path needs at least two points");
  for (const auto& v : *pts) {
    if (!v.is_array() || v.size() != 3) throw InputError("each path point is a triple of complex numbers");
    p.vertices.push_back({complex_from_json(v[0]), complex_from_json(v[1]), complex_from_json(v[2])});
  }
  return p;
}

json path_to_json(const ChargePath& p) {
  json pts = json::array();
  for (const auto& v : p.vertices)
    pts.push_back({complex_to_json(v(0)), complex_to_json(v(1)), complex_to_json(v(2))});
  return {{"resolution", p.resolution}, {"points", pts}};
}

json to_json(const StabPoint& p) {
  return {{"chart", std::string(1, p.chart)},
          {"m", {p.m(0), p.m(1), p.m(2)}},
          {"phi", {p.phi(0), p.phi(1), p.phi(2)}}};
}

StabPoint point_from_json(const json& j) {
  try {
    StabPoint p;
    const auto label = j.at("chart").get<std::string>();
    if (label.size() != 1 || label[0] < 'A' || label[0] > 'L') throw InputError("chart label must be A..L");
    p.chart = label[0];
    for (int i = 0; i < 3; ++i) {
      p.m(i) = j.at("m").at(i).get<double>();
      p.phi(i) = j.at("phi").at(i).get<double>();
    }
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad point: ") + e.what());
  }
}

json to_json(const Lift& l) {
  json j = to_json(l.point);
  j["pvec"] = {l.pvec(0), l.pvec(1), l.pvec(2)};
  return j;
}

json to_json(const LiftTrace& t) {
  json ev = json::array();
  for (const auto& e : t.events) {
    json x = to_json(e.point);
    x["t"] = e.t;
    x["facet"] = e.crossed ? json{e.crossed->i + 1, e.crossed->j + 1} : json(nullptr);
    ev.push_back(x);
  }
  json j{{"status", status_name(t.status)}, {"t_stop", t.t_stop}, {"crossings", t.crossings()}, {"events", ev}};
  if (t.status == TraceStatus::HitHyperplane) j["hyperplane"] = t.hyperplane;
  return j;
}

LiftTrace trace_from_json(const json& j) {
  try {
    LiftTrace t;
    const auto st = j.at("status").get<std::string>();
    if (st == status_name(TraceStatus::Complete)) t.status = TraceStatus::Complete;
    else if (st == status_name(TraceStatus::HitHyperplane)) t.status = TraceStatus::HitHyperplane;
    else if (st == status_name(TraceStatus::Ambiguous)) t.status = TraceStatus::Ambiguous;
    else throw InputError("unknown trace status '" + st + "'");
    t.t_stop = j.value("t_stop", 1.0);
    t.hyperplane = j.value("hyperplane", 0);
    for (const auto& e : j.at("events")) {
      TraceEvent ev{e.at("t").get<double>(), point_from_json(e), std::nullopt};
      const auto& f = e.value("facet", json(nullptr));
      if (!f.is_null()) ev.crossed = Facet{f.at(0).get<int>() - 1, f.at(1).get<int>() - 1};
      t.events.push_back(ev);
    }
    if (t.events.empty()) throw InputError("trace has no events");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad trace: ") + e.what());
  }
}

std::string trace_csv(const LiftTrace& t) {
  std::ostringstream o;
  o << std::setprecision(12);
  o << "t,chart,m1,m2,m3,phi1,phi2,phi3,facet\n";
  for (const auto& e : t.events) {
    o << e.t << ',' << e.point.chart;
    for (int i = 0; i < 3; ++i) o << ',' << e.point.m(i);
    for (int i = 0; i < 3; ++i) o << ',' << e.point.phi(i);
    o << ',';
    if (e.crossed) o << e.crossed->i + 1 << e.crossed->j + 1;
    o << '\n';
  }
  return o.str();
}

// ---- tables ----

std::filesystem::path reference_dir() {
  if (const char* env = std::getenv("A3STAB_DATA_DIR")) return env;
  return A3STAB_DATA_DIR;
}

json load_reference(const std::string& name) {
  const auto path = reference_dir() / name;
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string inequality(const ChartSpec& c, const Facet& f) {
  const int a = *c.alpha[f.i][f.j];
  std::string s = c.objects[f.i].name() + "<" + c.objects[f.j].name();
  if (a > 0) s += "+" + std::to_string(a);
  if (a < 0) s += std::to_string(a);
  return s;
}

namespace {

json degree_json(const Degree& d) { return d ? json(*d) : json(nullptr); }

json names(const Triple& t) {
  json j = json::array();
  for (const auto& x : t) j.push_back(x.name());
  return j;
}

}  // namespace

json table_exc() {
  json rows = json::array();
  for (const auto& c : all_charts())
    rows.push_back({{"label", std::string(1, c.label)},
                    {"type", type_name(c.type)},
                    {"objects", names(c.objects)},
                    {"k12", degree_json(c.k[0][1])},
                    {"k13", degree_json(c.k[0][2])},
                    {"k23", degree_json(c.k[1][2])}});
  return {{"table", "exc"}, {"rows", rows}};
}

json table_alpha() {
  json rows = json::array();
  for (const auto& c : all_charts())
    rows.push_back({{"label", std::string(1, c.label)},
                    {"type", type_name(c.type)},
                    {"alpha12", degree_json(c.alpha[0][1])},
                    {"alpha23", degree_json(c.alpha[1][2])},
                    {"alpha13", degree_json(c.alpha[0][2])}});
  return {{"table", "alpha"}, {"rows", rows}};
}

json table_ineq() {
  json rows = json::array();
  for (const auto& c : all_charts()) {
    auto cell = [&](int i, int j) { return c.alpha[i][j] ? inequality(c, {i, j}) : std::string(); };
    rows.push_back({{"label", std::string(1, c.label)},
                    {"ineq12", cell(0, 1)},
                    {"ineq23", cell(1, 2)},
                    {"ineq13", cell(0, 2)}});
  }
  return {{"table", "ineq"}, {"rows", rows}};
}

json mutation_graph_json() {
  const auto g = mutation_graph();
  json j{{"nodes", json::array()}, {"R1", json::array()}, {"R2", json::array()},
         {"loops", {{"R1", json::array()}, {"R2", json::array()}}}};
  for (char n : g.nodes) j["nodes"].push_back(std::string(1, n));
  for (const auto& e : g.edges) {
    const std::string gen = "R" + std::to_string(e.generator);
    if (e.self_loop()) j["loops"][gen].push_back(std::string(1, e.from));
    else j[gen].push_back({std::string(1, e.from), std::string(1, e.to)});
  }
  return j;
}

std::string mutation_graph_dot() {
  const auto g = mutation_graph();
  std::ostringstream o;
  o << "digraph mutations {\n";
  for (char n : g.nodes) o << "  " << n << ";\n";
  for (const auto& e : g.edges) {
    o << "  " << e.from << " -> " << e.to << " [label=\"R" << e.generator << "\"";
    o << (e.generator == 1 ? ", style=solid" : ", style=dotted");
    if (e.self_loop()) o << ", self_equivalent=true";
    o << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::vector<FacetConfig> facet_configs(const json& t3, bool use_errata) {
  std::vector<FacetConfig> out;
  try {
    for (const auto& c : t3.at("cells")) {
      FacetConfig base;
      base.id = c.at("id").get<std::string>();
      base.label = c.at("label").get<std::string>();
      base.chart = c.at("chart").get<std::string>().at(0);
      for (int i = 0; i < 3; ++i) {
        base.phases(i) = c.at("phases").at(i).get<double>();
        base.masses(i) = c.at("masses").at(i).get<double>();
      }
      base.free = c.at("free").get<int>();
      base.covering = c.at("covering").get<std::string>().at(0);
      for (const auto& p : c.at("partners")) base.partners += p.get<std::string>();

      // free object anywhere in its open half-plane, other masses jittered
      FacetConfig half = base;
      half.phase_lo = base.phases(base.free) - 0.45;
      half.phase_hi = base.phases(base.free) + 0.45;
      half.mass_lo = 5;
      half.mass_hi = 50;
      half.jitter = 0.1;
      out.push_back(half);

      const json* axis = &c.at("axis");
      const bool err = use_errata && c.contains("erratum");
      if (err) axis = &c.at("erratum").at("axis");
      for (const auto& a : *axis) {
        int band = 0;
        for (const auto& b : a.at("bands")) {
          FacetConfig ax = base;
          const double lo = b.at("mass").at(0).get<double>(), hi = b.at("mass").at(1).get<double>();
          ax.id = base.id + "/axis" + std::to_string(band++);
          ax.phase_lo = ax.phase_hi = a.at("phase").get<double>();
          ax.mass_lo = lo + 0.05 * (hi - lo);
          ax.mass_hi = hi - 0.05 * (hi - lo);
          ax.covering = b.at("covering").get<std::string>().at(0);
          ax.label = base.label + " axis [" + ax.covering + "]";
          ax.partners.clear();  // corner points, partners not recorded
          ax.erratum = err;
          out.push_back(ax);
        }
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad boundary table: ") + e.what());
  }
  return out;
}

json table_facets(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json rows = json::array();
  for (const auto& cfg : facet_configs(load_reference("table3.json"))) {
    const auto r = check_facet_config(cfg, samples, rng);
    json covers = json::object();
    for (const auto& [k, v] : r.covers) covers[k] = v;
    rows.push_back({{"id", cfg.id},
                    {"label", cfg.label},
                    {"chart", std::string(1, cfg.chart)},
                    {"expected", std::string(1, cfg.covering)},
                    {"samples", r.samples},
                    {"matched", r.matched},
                    {"uncovered", r.uncovered},
                    {"off_facet", r.off_facet},
                    {"partner_miss", r.partner_miss},
                    {"covers", covers},
                    {"erratum", cfg.erratum},
                    {"ok", r.ok()}});
  }
  int uncovered = 0, points = 0;
  for (const auto& cell : closedness_census(samples, seed)) {
    uncovered += cell.uncovered;
    points += cell.samples;
  }
  return {{"table", "facets"}, {"rows", rows}, {"census", {{"points", points}, {"uncovered", uncovered}}}};
}

std::string table_csv(const json& table) {
  std::ostringstream o;
  const auto& rows = table.at("rows");
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows[0].items()) keys.push_back(k);
  for (size_t k = 0; k < keys.size(); ++k) o << (k ? "," : "") << keys[k];
  o << '\n';
  auto cell = [](const json& v) -> std::string {
    if (v.is_null()) return "inf";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ";") + (x.is_string() ? x.get<std::string>() : x.dump());
      return s;
    }
    if (v.is_object()) {
      std::string s;
      for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : ";") + k + ":" + x.dump();
      return s;
    }
    return v.dump();
  };
  for (const auto& r : rows) {
    for (size_t k = 0; k < keys.size(); ++k) o << (k ? "," : "") << cell(r.at(keys[k]));
    o << '\n';
  }
  return o.str();
}

std::vector<std::string> diff_exc(const json& expected) {
  std::vector<std::string> out;
  const json got = table_exc();
  std::set<std::string> seen;
  for (const auto& e : expected.at("rows")) {
    const auto label = e.at("label").get<std::string>();
    seen.insert(label);
    const auto it = std::find_if(got["rows"].begin(), got["rows"].end(),
                                 [&](const json& r) { return r["label"] == label; });
    if (it == got["rows"].end()) {
      out.push_back(label + ": missing");
      continue;
    }
    for (const char* key : {"type", "objects", "k12", "k13", "k23"})
      if ((*it)[key] != e.at(key))
        out.push_back(label + "." + key + ": expected " + e.at(key).dump() + ", got " + (*it)[key].dump());
  }
  if (seen.size() != got["rows"].size()) out.push_back("row count differs");
  return out;
}

std::vector<std::string> diff_alpha_ineq(const json& expected) {
  std::vector<std::string> out;
  const json got = table_ineq();
  if (expected.at("rows").size() != got["rows"].size()) out.push_back("row count differs");
  for (const auto& e : expected.at("rows")) {
    const auto label = e.at("label").get<std::string>();
    const auto it = std::find_if(got["rows"].begin(), got["rows"].end(),
                                 [&](const json& r) { return r["label"] == label; });
    if (it == got["rows"].end()) {
      out.push_back(label + ": missing");
      continue;
    }
    for (const char* key : {"ineq12", "ineq23", "ineq13"})
      if ((*it)[key] != e.at(key))
        out.push_back(label + "." + key + ": expected " + e.at(key).dump() + ", got " + (*it)[key].dump());
  }
  return out;
}

std::vector<std::string> diff_graph(const json& expected) {
  std::vector<std::string> out;
  const json got = mutation_graph_json();
  auto as_set = [](const json& arr) {
    std::set<std::string> s;
    for (const auto& x : arr) s.insert(x.is_array() ? x[0].get<std::string>() + x[1].get<std::string>() : x.get<std::string>());
    return s;
  };
  for (const char* gen : {"R1", "R2"}) {
    if (as_set(got[gen]) != as_set(expected.at(gen))) out.push_back(std::string(gen) + " edges differ");
    if (as_set(got["loops"][gen]) != as_set(expected.at("loops").at(gen)))
      out.push_back(std::string(gen) + " loops differ");
  }
  return out;
}

std::vector<std::string> diff_facets(const json& expected, int samples, std::uint64_t seed) {
  std::vector<std::string> out;
  std::mt19937_64 rng(seed);
  for (const auto& cfg : facet_configs(expected)) {
    const auto r = check_facet_config(cfg, samples, rng);
    if (r.ok()) continue;
    std::string covers;
    for (const auto& [k, v] : r.covers) covers += " " + k + "x" + std::to_string(v);
    out.push_back(cfg.id + " " + cfg.label + ": expected " + cfg.covering + " in" + covers +
                  (r.off_facet ? " (off facet)" : "") + (r.partner_miss ? " (partner)" : ""));
  }
  for (const auto& cell : closedness_census(samples, seed))
    if (cell.uncovered)
      out.push_back(std::string("uncovered points on ") + cell.chart + " facet " +
                    std::to_string(cell.facet.i + 1) + std::to_string(cell.facet.j + 1));
  return out;
}

// ---- pictures ----

std::string svg_rays(const CentralCharge& z) {
  constexpr double size = 240, c = size / 2, reach = 90;
  std::array<std::complex<double>, 6> w;
  double big = 0;
  for (int i = 0; i < 6; ++i) {
    w[i] = charge_of(z, kIntervals[i].dimvec());
    big = std::max(big, std::abs(w[i]));
  }
  if (big == 0) big = 1;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << ' ' << size << "\" font-family=\"serif\" font-size=\"10\">\n";
  o << "<line x1=\"0\" y1=\"" << c << "\" x2=\"" << size << "\" y2=\"" << c
    << "\" stroke=\"#bbb\" stroke-dasharray=\"2,3\"/>\n";
  o << "<line x1=\"" << c << "\" y1=\"0\" x2=\"" << c << "\" y2=\"" << size
    << "\" stroke=\"#bbb\" stroke-dasharray=\"2,3\"/>\n";
  // coinciding charges share one ray and one label, e.g. S3=S123
  std::array<std::string, 6> label;
  std::array<bool, 6> drawn{};
  for (int i = 0; i < 6; ++i) {
    label[i] = kIntervals[i].name();
    for (int j = 0; j < i; ++j)
      if (!drawn[j] && std::abs(w[i] - w[j]) < 1e-12 * big && std::abs(w[i]) >= 1e-12 * big) {
        label[j] += "=" + label[i];
        drawn[i] = true;
        break;
      }
  }
  int zeros = 0;
  for (int i = 0; i < 6; ++i) {
    if (drawn[i]) continue;
    const auto& name = label[i];
    if (std::abs(w[i]) < 1e-12 * big) {
      o << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
      o << "<text x=\"" << fmt(c + 4, 1) << "\" y=\"" << fmt(c + 12 + 10 * zeros++, 1) << "\">" << name << "=0</text>\n";
      continue;
    }
    const double x = c + reach * w[i].real() / big, y = c - reach * w[i].imag() / big;
    const double u = std::atan2(-(y - c), x - c);
    o << "<line class=\"ray\" x1=\"" << c << "\" y1=\"" << c << "\" x2=\"" << fmt(x, 2) << "\" y2=\"" << fmt(y, 2)
      << "\" stroke=\"black\"/>\n";
    o << "<circle cx=\"" << fmt(x, 2) << "\" cy=\"" << fmt(y, 2) << "\" r=\"1.5\"/>\n";
    o << "<text x=\"" << fmt(x + 10 * std::cos(u), 2) << "\" y=\"" << fmt(y - 10 * std::sin(u) + 3, 2)
      << "\" text-anchor=\"middle\">" << name << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string svg_timeline(const LiftTrace& t) {
  constexpr double width = 600, left = 20, span = 560, top = 20, h = 24;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"80\" font-family=\"serif\" font-size=\"11\">\n";
  for (size_t k = 0; k + 1 < t.events.size(); ++k) {
    const double x0 = left + span * t.events[k].t, x1 = left + span * t.events[k + 1].t;
    const char label = t.events[k].point.chart;
    const int shade = 200 + 4 * (label - 'A');
    o << "<rect x=\"" << fmt(x0, 2) << "\" y=\"" << top << "\" width=\"" << fmt(std::max(x1 - x0, 0.5), 2)
      << "\" height=\"" << h << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(0.5 * (x0 + x1), 2) << "\" y=\"" << top + 16 << "\" text-anchor=\"middle\">" << label
      << "</text>\n";
  }
  for (const auto& e : t.events)
    if (e.crossed) {
      const double x = left + span * e.t;
      o << "<line class=\"crossing\" x1=\"" << fmt(x, 2) << "\" y1=\"" << top - 6 << "\" x2=\"" << fmt(x, 2)
        << "\" y2=\"" << top + h + 6 << "\" stroke=\"red\"/>\n";
    }
  o << "<text x=\"" << left << "\" y=\"" << top + h + 22 << "\">" << status_name(t.status) << ", "
    << t.crossings() << " crossing(s)</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace a3stab
