// Batch experiment runner over the factorization workbench. Every
// subcommand assembles a deterministic report (experiments sorted by
// key, exact rationals printed as fractions, no timestamps), emits it as
// JSON lines, CSV, or text, and exits 0 only if every verification in
// the run passed. Caps resolve as flags > IDEALARITH_CAPS env JSON >
// config file > built-in defaults.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "idealarith/certify.hpp"
#include "idealarith/engine.hpp"
#include "idealarith/families.hpp"
#include "idealarith/graded.hpp"
#include "idealarith/groebner.hpp"
#include "idealarith/ideal_lengths.hpp"
#include "idealarith/lengthset.hpp"
#include "idealarith/plane.hpp"
#include "idealarith/powerset.hpp"
#include "idealarith/rational.hpp"
#include "idealarith/staircase.hpp"
#include "idealarith/zerosum.hpp"

namespace {

using json = nlohmann::json;  // object keys stay sorted, which keeps dumps canonical
using idealarith::Rational;
namespace core = idealarith::core;
namespace poly = idealarith::poly;
namespace ideals = idealarith::ideals;
namespace power = idealarith::power;
namespace zs = idealarith::zs;

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// configuration

struct Config {
  std::string k_text;  // empty means the subcommand default applies
  std::optional<long long> max;
  long long degree = 24;
  std::size_t pattern_budget = std::size_t{1} << 20;
  unsigned long long seed = 20260814ull;
  std::string out;  // empty means stdout
  std::string format = "json";
  json sources = json::object();  // key -> which layer set it
};

long long want_positive(const json& v, const std::string& key, const std::string& layer) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw std::invalid_argument("config key '" + key + "' from " + layer +
                                " wants a positive integer, got " + v.dump());
  return v.get<long long>();
}

std::string want_string(const json& v, const std::string& key, const std::string& layer) {
  if (!v.is_string())
    throw std::invalid_argument("config key '" + key + "' from " + layer + " wants a string, got " + v.dump());
  return v.get<std::string>();
}

void apply_caps(Config& cfg, const json& j, const std::string& layer) {
  if (!j.is_object()) throw std::invalid_argument(layer + " must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "k") {
      cfg.k_text = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "max") {
      cfg.max = want_positive(value, key, layer);
    } else if (key == "degree") {
      cfg.degree = want_positive(value, key, layer);
    } else if (key == "pattern_budget") {
      cfg.pattern_budget = static_cast<std::size_t>(want_positive(value, key, layer));
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer())
        throw std::invalid_argument("config key 'seed' from " + layer + " wants an integer");
      cfg.seed = value.get<unsigned long long>();
    } else if (key == "out") {
      cfg.out = want_string(value, key, layer);
    } else if (key == "format") {
      cfg.format = want_string(value, key, layer);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "' in " + layer);
    }
    cfg.sources[key] = layer;
  }
}

// "a..b" or a single integer; empty text falls back to the given range.
std::pair<long long, long long> parse_k_range(const std::string& text, long long def_lo, long long def_hi) {
  if (text.empty()) return {def_lo, def_hi};
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long long k = std::stoll(text);
      return {k, k};
    }
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad k range '" + text + "': want an integer or lo..hi");
  }
}

ideals::CertifyOptions certify_options(const Config& cfg) {
  ideals::CertifyOptions opt;
  opt.pattern_budget = cfg.pattern_budget;
  opt.primary_power_cap = static_cast<int>(cfg.degree);
  return opt;
}

// ---------------------------------------------------------------------------
// report assembly

struct Experiment {
  bool pass = false;
  std::string summary;
  json data;
};

class Report {
 public:
  void add(std::string key, bool pass, std::string summary, json data) {
    if (!rows_.emplace(std::move(key), Experiment{pass, std::move(summary), std::move(data)}).second)
      throw std::logic_error("duplicate experiment key");
  }

  bool all_pass() const {
    for (const auto& [k, e] : rows_)
      if (!e.pass) return false;
    return true;
  }

  std::size_t size() const { return rows_.size(); }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& [k, e] : rows_)
      if (!e.pass) ++n;
    return n;
  }

  std::string render(const Config& cfg, const std::string& subcommand) const {
    std::ostringstream os;
    if (cfg.format == "json")
      render_json(os, cfg, subcommand);
    else if (cfg.format == "csv")
      render_csv(os, cfg, subcommand);
    else if (cfg.format == "text")
      render_text(os, cfg, subcommand);
    else
      throw std::invalid_argument("unknown format '" + cfg.format + "': want json, csv, or text");
    return os.str();
  }

 private:
  json caps_json(const Config& cfg) const {
    json caps;
    caps["degree"] = cfg.degree;
    caps["pattern_budget"] = cfg.pattern_budget;
    if (!cfg.k_text.empty()) caps["k"] = cfg.k_text;
    if (cfg.max) caps["max"] = *cfg.max;
    return caps;
  }

  void render_json(std::ostringstream& os, const Config& cfg, const std::string& subcommand) const {
    json header;
    header["record"] = "header";
    header["schema_version"] = kSchemaVersion;
    header["subcommand"] = subcommand;
    header["caps"] = caps_json(cfg);
    header["seed"] = cfg.seed;
    header["config_sources"] = cfg.sources;
    os << header.dump() << "\n";
    for (const auto& [key, e] : rows_) {
      json row;
      row["record"] = "experiment";
      row["key"] = key;
      row["pass"] = e.pass;
      row["summary"] = e.summary;
      row["data"] = e.data;
      os << row.dump() << "\n";
    }
    json foot;
    foot["record"] = "summary";
    foot["experiments"] = rows_.size();
    foot["failures"] = failures();
    foot["pass"] = all_pass();
    os << foot.dump() << "\n";
  }

  static std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      out += c;
      if (c == '"') out += '"';
    }
    return out + "\"";
  }

  void render_csv(std::ostringstream& os, const Config& cfg, const std::string& subcommand) const {
    os << "key,pass,summary\n";
    os << csv_quote("header/" + subcommand) << ",true,"
       << csv_quote("schema " + std::to_string(kSchemaVersion) + ", seed " + std::to_string(cfg.seed)) << "\n";
    for (const auto& [key, e] : rows_)
      os << csv_quote(key) << "," << (e.pass ? "true" : "false") << "," << csv_quote(e.summary) << "\n";
    os << csv_quote("summary") << "," << (all_pass() ? "true" : "false") << ","
       << csv_quote(std::to_string(rows_.size()) + " experiments, " + std::to_string(failures()) + " failures")
       << "\n";
  }

  void render_text(std::ostringstream& os, const Config& cfg, const std::string& subcommand) const {
    os << "idealarith report, schema " << kSchemaVersion << ", subcommand " << subcommand << ", seed "
       << cfg.seed << "\n";
    os << "caps: degree=" << cfg.degree << " pattern_budget=" << cfg.pattern_budget;
    if (!cfg.k_text.empty()) os << " k=" << cfg.k_text;
    if (cfg.max) os << " max=" << *cfg.max;
    os << "\n";
    for (const auto& [key, e] : rows_)
      os << (e.pass ? "[PASS] " : "[FAIL] ") << key << "  " << e.summary << "\n";
    os << "summary: " << rows_.size() << " experiments, " << failures() << " failures\n";
  }

  std::map<std::string, Experiment> rows_;
};

// ---------------------------------------------------------------------------
// json views of library records

json json_of(const core::LengthSet& L) {
  json j;
  j["values"] = L.values();
  j["text"] = core::to_string(L);
  return j;
}

json json_of(const ideals::IdentityCheck& c) {
  json j;
  j["name"] = c.name;
  j["expected"] = c.expected;
  j["holds"] = c.holds;
  j["ok"] = c.ok();
  j["lhs_basis"] = c.lhs_basis;
  j["rhs_basis"] = c.rhs_basis;
  j["lhs_hash"] = c.lhs_hash;
  j["rhs_hash"] = c.rhs_hash;
  return j;
}

std::string primary_text(poly::PrimaryEvidence e) {
  switch (e) {
    case poly::PrimaryEvidence::MonomialPurePowers:
      return "monomial generators include pure powers of X1 and X2";
    case poly::PrimaryEvidence::RadicalIsMaximal:
      return "pure powers of X1 and X2 found by membership search";
    case poly::PrimaryEvidence::NotShown:
    default:
      return "not shown";
  }
}

json json_of(const ideals::AtomCertificate& c) {
  json j;
  j["verdict"] = ideals::to_string(c.verdict);
  j["ideal_basis"] = c.ideal_basis;
  j["ideal_hash"] = c.ideal_hash;
  j["mdeg"] = c.mdeg;
  j["primary_evidence"] = primary_text(c.primary);
  j["assumptions"] = c.assumptions;
  json splits = json::array();
  for (const auto& s : c.splits) {
    json row;
    row["d"] = s.d;
    row["e"] = s.e;
    row["patterns"] = s.patterns;
    row["refuted_by_filters"] = s.refuted_by_filters;
    row["refuted_by_system"] = s.refuted_by_system;
    row["open"] = s.open;
    splits.push_back(row);
  }
  j["splits"] = splits;
  json open = json::array();
  for (const auto& p : c.unresolved) {
    json row;
    row["d"] = p.d;
    row["e"] = p.e;
    row["left_leads"] = p.left_leads;
    row["right_leads"] = p.right_leads;
    row["status"] = p.status;
    open.push_back(row);
  }
  j["unresolved"] = open;
  if (c.verdict == ideals::Verdict::Witness) {
    json w;
    std::vector<std::string> lg, rg;
    for (const auto& f : c.factor_left) lg.push_back(poly::to_string(f));
    for (const auto& f : c.factor_right) rg.push_back(poly::to_string(f));
    w["left_generators"] = lg;
    w["right_generators"] = rg;
    w["left_basis"] = c.factor_left_basis;
    w["right_basis"] = c.factor_right_basis;
    w["left_hash"] = c.factor_left_hash;
    w["right_hash"] = c.factor_right_hash;
    w["reverified"] = c.witness_reverified;
    j["witness"] = w;
  }
  j["note"] = c.note;
  return j;
}

json json_of(const ideals::IntervalLengthsReport& r) {
  json j;
  j["k"] = r.k;
  j["lengths"] = json_of(r.lengths);
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json row;
    row["length"] = w.length;
    row["factors"] = w.factors;
    row["reverified"] = w.reverified;
    ws.push_back(row);
  }
  j["witnesses"] = ws;
  json atoms = json::array();
  for (const auto& a : r.atoms) {
    json row;
    row["family"] = a.family;
    row["verdict"] = ideals::to_string(a.verdict);
    row["hash"] = a.hash;
    atoms.push_back(row);
  }
  j["atoms"] = atoms;
  j["upper_bound_certified"] = r.upper_bound_certified;
  j["upper_bound_note"] = r.upper_bound_note;
  j["all_pass"] = r.all_pass;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json json_of(const core::ProgressionDecomposition& d) {
  json j;
  j["y"] = d.y;
  j["d"] = d.d;
  j["M"] = d.M;
  j["period"] = d.period;
  j["head"] = d.head;
  j["core"] = d.core;
  j["tail"] = d.tail;
  return j;
}

json lengths_profile(const core::LengthSet& L) {
  json j;
  j["lengths"] = json_of(L);
  j["delta"] = core::delta_of(L);
  j["rho"] = idealarith::to_string(core::rho_of(L));
  core::ProgressionReport pr = core::recognize_progressions(L);
  if (pr.ap) j["ap"] = json_of(*pr.ap);
  if (pr.aamp) j["aamp"] = json_of(*pr.aamp);
  return j;
}

// ---------------------------------------------------------------------------
// element windows

std::vector<power::FiniteSet> reduced_sets_up_to(long long n) {
  if (n < 0 || n > 16)
    throw std::invalid_argument("power monoid window wants max element in [0, 16], got " + std::to_string(n));
  std::vector<power::FiniteSet> out;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<long long> v{0};
    for (long long b = 1; b <= n; ++b)
      if (mask & (1ull << (b - 1))) v.push_back(b);
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end(),
            [](const power::FiniteSet& a, const power::FiniteSet& b) { return a.values() < b.values(); });
  return out;
}

std::vector<core::PlaneElement> plane_window(long long n, bool with_axes) {
  if (n < 1 || n > 64) throw std::invalid_argument("plane window wants max in [1, 64]");
  std::vector<core::PlaneElement> out;
  long long lo = with_axes ? 0 : 1;
  for (long long x = lo; x <= n; ++x)
    for (long long y = lo; y <= n; ++y) {
      if (x == 0 && y == 0) continue;
      out.push_back(core::PlaneElement{x, y});
    }
  return out;
}

std::vector<std::vector<long long>> group_elements(const zs::GroupSpec& g, bool include_zero) {
  long long total = 1;
  for (long long o : g.orders) {
    if (o == 0) throw std::invalid_argument("window enumeration wants a finite group");
    total *= o;
    if (total > 64) throw core::bound_exceeded("group too large for window enumeration (order > 64)");
  }
  std::vector<std::vector<long long>> out;
  std::vector<long long> e(g.rank(), 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      e[i] = rem % g.orders[i];
      rem /= g.orders[i];
    }
    if (!include_zero && g.is_zero(e)) continue;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<zs::ZeroSumSequence> zero_sum_window(const zs::GroupSpec& g, long long max_length,
                                                 bool include_zero, std::size_t budget = 200000) {
  auto elems = group_elements(g, include_zero);
  std::vector<zs::ZeroSumSequence> out;
  std::vector<std::pair<std::vector<long long>, long long>> items;
  std::size_t visited = 0;
  auto rec = [&](auto&& self, std::size_t idx, long long remaining) -> void {
    if (++visited > budget) throw core::bound_exceeded("zero-sum window enumeration budget exceeded");
    if (idx == elems.size()) {
      if (items.empty()) return;
      zs::ZeroSumSequence s(g, items);
      if (s.is_zero_sum()) out.push_back(std::move(s));
      return;
    }
    for (long long m = 0; m <= remaining; ++m) {
      if (m > 0) items.emplace_back(elems[idx], m);
      self(self, idx + 1, remaining - m);
      if (m > 0) items.pop_back();
    }
  };
  rec(rec, 0, max_length);
  std::sort(out.begin(), out.end(),
            [](const zs::ZeroSumSequence& a, const zs::ZeroSumSequence& b) { return a.key() < b.key(); });
  return out;
}

core::PlaneElement parse_plane(const std::string& text, bool free_variant) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 5 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("bad plane element '" + text + "': want (x,y)");
  auto comma = t.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad plane element '" + text + "'");
  long long x = std::stoll(t.substr(1, comma - 1));
  long long y = std::stoll(t.substr(comma + 1, t.size() - comma - 2));
  return free_variant ? core::FreePlaneMonoid::make(x, y) : core::PlaneMonoid::make(x, y);
}

std::string pad2(long long k) {
  std::string s = std::to_string(k);
  return s.size() < 2 ? "0" + s : s;
}

// ---------------------------------------------------------------------------
// subcommands

void run_lengths(Report& rep, const Config& cfg, const std::string& monoid, const std::string& element) {
  core::LengthSet L;
  std::string elem_key;
  json extra = json::object();
  if (monoid == "power") {
    power::FiniteSet A = power::parse_finite_set(element);
    power::ReducedPowerMonoid mon;
    mon.max_element = std::max<long long>(mon.max_element, A.max());
    core::FactorEngine<power::ReducedPowerMonoid> eng(mon);
    L = power::power_lengths(eng, A);
    elem_key = A.key();
  } else if (monoid == "plane" || monoid == "freeplane") {
    core::PlaneElement a = parse_plane(element, monoid == "freeplane");
    if (monoid == "plane") {
      core::PlaneMonoid mon;
      core::FactorEngine<core::PlaneMonoid> eng(mon);
      L = eng.length_set(a);
      elem_key = mon.key(a);
    } else {
      core::FreePlaneMonoid mon;
      core::FactorEngine<core::FreePlaneMonoid> eng(mon);
      L = eng.length_set(a);
      elem_key = mon.key(a);
    }
  } else if (monoid == "staircase") {
    if (element.empty()) throw std::invalid_argument("empty staircase literal");
    ideals::Staircase s = element.front() == '<'
                              ? ideals::parse_staircase(element)
                              : [&] {
                                  auto st = ideals::staircase_of(ideals::family_expand(element));
                                  if (!st)
                                    throw std::invalid_argument("family '" + element +
                                                                "' does not expand to a monomial ideal");
                                  return *st;
                                }();
    L = ideals::staircase_lengths(s, static_cast<int>(cfg.degree));
    elem_key = s.key();
    extra["note"] = "lengths relative to the monoid of monomial ideals";
  } else if (monoid.rfind("zerosum:", 0) == 0) {
    zs::GroupSpec g = zs::parse_group(monoid.substr(8));
    zs::ZeroSumSequence s = zs::parse_sequence(g, element);
    zs::BZeroSum mon;
    mon.max_length = std::max<long long>(mon.max_length, s.length());
    core::FactorEngine<zs::BZeroSum> eng(mon);
    L = zs::lengths_over_group(eng, s);
    elem_key = s.key();
  } else {
    throw std::invalid_argument("unknown monoid '" + monoid +
                                "': want power, plane, freeplane, staircase, or zerosum:<group>");
  }

  json data = lengths_profile(L);
  data["monoid"] = monoid;
  data["element"] = elem_key;
  data.update(extra);
  rep.add("lengths/" + monoid + "/" + elem_key, true,
          "L(" + elem_key + ") = " + core::to_string(L) + ", rho = " +
              idealarith::to_string(core::rho_of(L)),
          data);
}

template <core::DivisorOracle O>
std::pair<std::vector<std::string>, bool> atoms_in_window(const O& mon,
                                                          const std::vector<typename O::Element>& window,
                                                          bool (*closed_form)(const typename O::Element&)) {
  core::FactorEngine<O> eng(mon);
  std::vector<std::string> atoms;
  bool crosscheck = true;
  for (const auto& a : window) {
    bool atom = eng.is_atom(a);
    if (closed_form && atom != closed_form(a)) crosscheck = false;
    if (!closed_form) {
      core::LengthSet L = eng.length_set(a);
      if (atom != (L == core::LengthSet({1}))) crosscheck = false;
    }
    if (atom) atoms.push_back(mon.key(a));
  }
  return {atoms, crosscheck};
}

void run_atoms(Report& rep, const Config& cfg, const std::string& monoid) {
  long long n = cfg.max.value_or(8);
  std::vector<std::string> atoms;
  bool crosscheck = true;
  std::string crosscheck_name;
  std::size_t window_size = 0;
  if (monoid == "plane") {
    core::PlaneMonoid mon;
    auto window = plane_window(n, false);
    window_size = window.size();
    std::tie(atoms, crosscheck) = atoms_in_window(
        mon, window, +[](const core::PlaneElement& a) { return a.x == 1 || a.y == 1; });
    crosscheck_name = "atoms are exactly the elements with a coordinate equal to 1";
  } else if (monoid == "freeplane") {
    core::FreePlaneMonoid mon;
    auto window = plane_window(n, true);
    window_size = window.size();
    std::tie(atoms, crosscheck) = atoms_in_window(
        mon, window, +[](const core::PlaneElement& a) { return a.x + a.y == 1; });
    crosscheck_name = "atoms are exactly the two unit vectors";
  } else if (monoid == "power") {
    power::ReducedPowerMonoid mon;
    auto window = reduced_sets_up_to(n);
    window_size = window.size();
    core::FactorEngine<power::ReducedPowerMonoid> eng(mon);
    for (const auto& A : window) {
      if (mon.is_identity(A)) continue;
      bool atom = eng.is_atom(A);
      if (atom != (eng.length_set(A) == core::LengthSet({1}))) crosscheck = false;
      if (atom) atoms.push_back(A.key());
    }
    crosscheck_name = "atoms are exactly the elements with length set {1}";
  } else if (monoid.rfind("zerosum:", 0) == 0) {
    zs::GroupSpec g = zs::parse_group(monoid.substr(8));
    zs::BZeroSum mon;
    mon.max_length = std::max<long long>(mon.max_length, n);
    auto window = zero_sum_window(g, n, true);
    window_size = window.size();
    core::FactorEngine<zs::BZeroSum> eng(mon);
    for (const auto& s : window) {
      bool atom = eng.is_atom(s);
      if (atom != zs::minimal_zero_sum(s)) crosscheck = false;
      if (atom) atoms.push_back(s.key());
    }
    crosscheck_name = "atoms are exactly the minimal zero-sum sequences";
  } else {
    throw std::invalid_argument("unknown monoid '" + monoid +
                                "': want power, plane, freeplane, or zerosum:<group>");
  }
  json data;
  data["monoid"] = monoid;
  data["max"] = n;
  data["window_size"] = window_size;
  data["count"] = atoms.size();
  data["atoms"] = atoms;
  data["crosscheck"] = crosscheck_name;
  data["crosscheck_ok"] = crosscheck;
  rep.add("atoms/" + monoid + "/max=" + pad2(n), crosscheck,
          std::to_string(atoms.size()) + " atoms in a window of " + std::to_string(window_size) +
              (crosscheck ? ", crosscheck ok" : ", CROSSCHECK FAILED"),
          data);
}

template <core::DivisorOracle O>
void union_experiment(Report& rep, const std::string& monoid, long long k, long long n, const O& mon,
                      const std::vector<typename O::Element>& window) {
  core::FactorEngine<O> eng(mon);
  auto u = core::union_of_lengths(eng, k, window);
  json data;
  data["monoid"] = monoid;
  data["k"] = k;
  data["max"] = n;
  data["window_size"] = window.size();
  data["values"] = json_of(u.values);
  data["nothing_realizes_k"] = u.nothing_realizes_k;
  data["contributing_count"] = u.contributing.size();
  json sample = json::array();
  for (std::size_t i = 0; i < u.contributing.size() && i < 12; ++i) sample.push_back(u.contributing[i]);
  data["contributing_sample"] = sample;
  rep.add("unions/" + monoid + "/k=" + pad2(k), true,
          u.nothing_realizes_k
              ? "no element of the window realizes length " + std::to_string(k)
              : "U_" + std::to_string(k) + " over the window = " + core::to_string(u.values) + " from " +
                    std::to_string(u.contributing.size()) + " elements",
          data);
}

void run_unions(Report& rep, const Config& cfg, const std::string& monoid) {
  auto [lo, hi] = parse_k_range(cfg.k_text, 2, 2);
  if (lo != hi) throw std::invalid_argument("unions wants a single --k value, not a range");
  long long k = lo;
  if (k < 1) throw std::invalid_argument("unions wants k >= 1");
  long long n = cfg.max.value_or(8);
  if (monoid == "plane") {
    core::PlaneMonoid mon;
    union_experiment(rep, monoid, k, n, mon, plane_window(n, false));
  } else if (monoid == "power") {
    power::ReducedPowerMonoid mon;
    union_experiment(rep, monoid, k, n, mon, reduced_sets_up_to(n));
  } else if (monoid.rfind("zerosum:", 0) == 0) {
    zs::GroupSpec g = zs::parse_group(monoid.substr(8));
    zs::BZeroSum mon;
    mon.max_length = std::max<long long>(mon.max_length, n);
    union_experiment(rep, monoid, k, n, mon, zero_sum_window(g, n, false));
  } else {
    throw std::invalid_argument("unknown monoid '" + monoid + "': want power, plane, or zerosum:<group>");
  }
}

void run_certify(Report& rep, const Config& cfg, const std::vector<std::string>& targets) {
  ideals::CertifyOptions opt = certify_options(cfg);
  for (const std::string& t : targets) {
    ideals::AtomCertificate cert;
    std::string label;
    if (!t.empty() && t.front() == '<') {
      poly::Ideal I(poly::parse_ideal_literal(t));
      cert = ideals::certify_atom(I, opt);
      label = t;
    } else {
      ideals::IdealFamily f = ideals::parse_family(t);
      cert = ideals::certify_atom(f, opt);
      label = ideals::family_text(f);
    }
    bool pass = cert.verdict != ideals::Verdict::Inconclusive;
    std::string summary;
    switch (cert.verdict) {
      case ideals::Verdict::Certified:
        summary = "Certified: every candidate factor shape refuted";
        break;
      case ideals::Verdict::Witness:
        summary = "Witness: proper factorization found and re-verified";
        break;
      default:
        summary = "Inconclusive: " + cert.note;
        break;
    }
    rep.add("certify-atom/" + label, pass, summary, json_of(cert));
  }
}

void run_identities(Report& rep, const Config& cfg) {
  int grid = static_cast<int>(cfg.max.value_or(8));
  auto checks = ideals::identity_suite(grid);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    std::string summary = c.expected ? (c.holds ? "holds" : "FAILED to hold")
                                     : (c.holds ? "negative control UNEXPECTEDLY holds"
                                                : "fails, as the negative control must");
    rep.add("verify-identities/" + pad2(static_cast<long long>(i)) + "/" + c.name, c.ok(), summary,
            json_of(c));
  }
}

void run_theorem51(Report& rep, const Config& cfg) {
  auto [lo, hi] = parse_k_range(cfg.k_text, 2, 8);
  if (lo < 2) throw std::invalid_argument("theorem51 wants k >= 2");
  ideals::CertifyOptions opt = certify_options(cfg);
  for (long long k = lo; k <= hi; ++k) {
    auto r = ideals::theorem51_lengths(static_cast<int>(k), opt);
    bool pass = r.all_pass && r.lengths == core::LengthSet::interval(2, k);
    rep.add("theorem51/k=" + pad2(k), pass,
            "L(a[" + std::to_string(k) + "]) = " + core::to_string(r.lengths) + ", " +
                std::to_string(r.witnesses.size()) + " reverified factorizations, " +
                std::to_string(r.atoms.size()) + " certified atoms" +
                (r.failure.empty() ? "" : "; " + r.failure),
            json_of(r));
  }
}

void run_witnesses(Report& rep, const Config& cfg, const std::string& which) {
  bool all = which == "all";
  if (!all && which != "not-transfer-krull" && which != "non-ff" && which != "u2")
    throw std::invalid_argument("unknown witness kind '" + which +
                                "': want not-transfer-krull, non-ff, u2, or all");
  if (all || which == "not-transfer-krull") {
    auto w = ideals::not_transfer_krull_witness();
    json data;
    data["left"] = json_of(w.left_product);
    data["right"] = json_of(w.right_product);
    data["factors_distinct"] = w.factors_distinct;
    data["left_factor_hash"] = w.left_factor_hash;
    data["right_factor_hash"] = w.right_factor_hash;
    rep.add("witnesses/not-transfer-krull", w.pass,
            "a[1]*b[2] = a[1]*a[2] = a[3] with b[2] != a[2]: cancellation fails", data);
  }
  if (all || which == "non-ff") {
    long long count = std::max<long long>(5, cfg.max.value_or(5));
    std::vector<Rational> alphas;
    for (long long i = 1; i <= count; ++i) alphas.push_back(idealarith::rat(static_cast<long>(i)));
    auto f = ideals::non_ff_witness(alphas);
    json data;
    std::vector<std::string> atext;
    for (const auto& a : f.alphas) atext.push_back(idealarith::to_string(a));
    data["alphas"] = atext;
    json prods = json::array();
    for (const auto& p : f.products) prods.push_back(json_of(p));
    data["products"] = prods;
    data["factor_hashes"] = f.factor_hashes;
    data["pairwise_distinct"] = f.pairwise_distinct;
    rep.add("witnesses/non-ff", f.pass,
            "a[3] has " + std::to_string(f.alphas.size()) + " pairwise distinct verified divisors", data);
  }
  if (all || which == "u2") {
    long long imax = cfg.max.value_or(3);
    if (imax < 1) throw std::invalid_argument("u2 wants max >= 1");
    std::set<std::string> atom_names{"a[1]", "b[2]"};
    for (long long i = 1; i <= imax; ++i) {
      auto p = ideals::u2_witnesses(static_cast<int>(i));
      atom_names.insert("c[" + std::to_string(2 * i + 1) + "]");
      json data;
      data["i"] = i;
      data["short_form"] = json_of(p.short_form);
      data["long_form"] = json_of(p.long_form);
      data["full_power"] = json_of(p.full_power);
      data["chain_left"] = json_of(p.chain_left);
      data["chain_mid"] = json_of(p.chain_mid);
      data["shared_lengths"] = p.shared_lengths;
      rep.add("witnesses/u2/i=" + pad2(i), p.pass,
              "a[" + std::to_string(2 * i + 2) + "] realizes lengths {2, " + std::to_string(2 * i + 1) +
                  ", " + std::to_string(2 * i + 2) + "}",
              data);
    }
    ideals::CertifyOptions opt = certify_options(cfg);
    for (const std::string& name : atom_names) {
      auto cert = ideals::certify_atom(ideals::parse_family(name), opt);
      bool pass = cert.verdict == ideals::Verdict::Certified;
      rep.add("witnesses/u2/atom/" + name, pass,
              pass ? "Certified atom" : "NOT certified: " + ideals::to_string(cert.verdict),
              json_of(cert));
    }
  }
}

void run_elastic(Report& rep, const Config& cfg, std::vector<std::string> qs) {
  if (qs.empty()) qs = {"3/2", "5/3", "7/4", "9/5"};
  ideals::CertifyOptions opt = certify_options(cfg);
  for (const std::string& qt : qs) {
    Rational q = idealarith::parse_rational(qt);
    auto w = ideals::elastic_witness(q, opt);
    bool pass = w.ok && w.rho == q;
    json data;
    data["q"] = idealarith::to_string(q);
    data["ok"] = w.ok;
    if (!w.rejection.empty()) data["rejection"] = w.rejection;
    data["construction"] = w.construction;
    json plan;
    plan["r"] = w.plan.r;
    plan["s"] = w.plan.s;
    plan["shift"] = w.plan.shift;
    plan["expected_witness_max"] = w.plan.expected_witness_max;
    plan["predicted"] = json_of(w.plan.predicted);
    plan["rho"] = idealarith::to_string(w.plan.rho);
    data["plan"] = plan;
    data["base"] = json_of(w.base);
    data["lengths"] = json_of(w.lengths);
    data["rho"] = idealarith::to_string(w.rho);
    rep.add("elastic/q=" + idealarith::to_string(q), pass,
            pass ? "rho = " + idealarith::to_string(w.rho) + " attained by " + w.construction
                 : "failed: " + (w.rejection.empty() ? "elasticity mismatch" : w.rejection),
            data);
  }
}

void run_power_iso(Report& rep, const Config& cfg) {
  long long n = cfg.max.value_or(6);
  if (n < 0 || n > 10)
    throw std::invalid_argument("powermonoid-iso wants max in [0, 10] (pair count is 4^max)");
  auto sets = reduced_sets_up_to(n);
  std::vector<ideals::Staircase> images;
  images.reserve(sets.size());
  for (const auto& A : sets) images.push_back(power::to_monomial_ideal(A));

  bool identity_ok = images.front().is_identity() && sets.front().values() == std::vector<long long>{0};
  bool injective = true;
  std::string collision;
  std::map<std::string, std::string> seen;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto [it, fresh] = seen.emplace(images[i].key(), sets[i].key());
    if (!fresh) {
      injective = false;
      collision = sets[i].key() + " and " + it->second + " share the image " + images[i].key();
    }
  }

  bool homomorphic = true;
  std::string mismatch;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sets.size() && homomorphic; ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      ++pairs;
      if (power::to_monomial_ideal(sets[i] + sets[j]) != images[i] * images[j]) {
        homomorphic = false;
        mismatch = sets[i].key() + " + " + sets[j].key();
        break;
      }
    }

  json data;
  data["max"] = n;
  data["sets"] = sets.size();
  data["pairs"] = pairs;
  data["identity_preserved"] = identity_ok;
  data["homomorphism_ok"] = homomorphic;
  data["injectivity_ok"] = injective;
  if (!collision.empty()) data["collision"] = collision;
  if (!mismatch.empty()) data["mismatch"] = mismatch;
  bool pass = identity_ok && homomorphic && injective;
  rep.add("powermonoid-iso/max=" + pad2(n), pass,
          pass ? "sumsets embed into monomial ideals: " + std::to_string(pairs) +
                     " products checked over " + std::to_string(sets.size()) + " sets, injective"
               : "embedding check FAILED",
          data);
}

void run_zerosum(Report& rep, const Config& cfg, const std::string& group, const std::string& target) {
  {
    core::LengthSet L = core::parse_length_set(target);
    zs::RealizeResult res = zs::realize_length_set_over_Z(L);
    bool verified = false;
    std::string witness_key, recomputed;
    if (res.found) {
      zs::GroupSpec z = zs::parse_group("Z");
      zs::BZeroSum mon;
      mon.max_length = std::max<long long>(mon.max_length, res.seq.length());
      core::FactorEngine<zs::BZeroSum> eng(mon);
      core::LengthSet L2 = zs::lengths_over_group(eng, res.seq);
      verified = L2 == L;
      witness_key = res.seq.key();
      recomputed = core::to_string(L2);
    }
    json data;
    data["target"] = core::to_string(L);
    data["found"] = res.found;
    if (res.found) {
      data["witness"] = witness_key;
      data["recomputed_lengths"] = recomputed;
      data["verified"] = verified;
    }
    if (!res.note.empty()) data["note"] = res.note;
    rep.add("zerosum/realize/" + core::to_string(L), res.found && verified,
            res.found ? (verified ? "L(" + witness_key + ") = " + core::to_string(L) + " over Z"
                                  : "witness found but re-verification FAILED")
                      : "not found: " + res.note,
            data);
  }
  {
    zs::GroupSpec g = zs::parse_group(group);
    long long n = cfg.max.value_or(9);
    auto window = zero_sum_window(g, n, false);
    zs::BZeroSum mon;
    mon.max_length = std::max<long long>(mon.max_length, n);
    core::FactorEngine<zs::BZeroSum> eng(mon);
    auto res = core::elasticity_gap_scan(eng, window);
    json data;
    data["group"] = group;
    data["window_max_length"] = n;
    data["window_size"] = window.size();
    data["support"] = "nonzero elements";
    data["all_half_factorial"] = res.all_half_factorial;
    if (!res.all_half_factorial) {
      data["gap"] = idealarith::to_string(res.gap);
      data["witness"] = res.witness_key;
      data["witness_lengths"] = json_of(res.witness_lengths);
    }
    bool pass = !res.all_half_factorial && res.gap > 1;
    rep.add("zerosum/gap-scan/" + group, pass,
            pass ? "smallest elasticity above 1 in the window: " + idealarith::to_string(res.gap) +
                       " at " + res.witness_key
                 : "window shows no elasticity above 1",
            data);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact factorization arithmetic workbench: length sets, atom certificates, and"
               " identity transcripts over power monoids, zero-sum monoids, and ideals of Q[X1,X2]"};
  app.require_subcommand(1);

  std::optional<std::string> opt_k, opt_out, opt_format, opt_config;
  std::optional<long long> opt_max, opt_degree, opt_pattern, opt_seed;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--k", opt_k, "k value or range, e.g. 4 or 2..8");
    s->add_option("--max", opt_max, "window size / grid bound for this subcommand");
    s->add_option("--caps-degree", opt_degree, "degree cap for membership and staircase searches");
    s->add_option("--pattern-budget", opt_pattern, "factor-shape enumeration budget for certificates");
    s->add_option("--seed", opt_seed, "seed recorded in the report header");
    s->add_option("--out", opt_out, "write the report to this file instead of stdout");
    s->add_option("--format", opt_format, "report format: json (lines), csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    s->add_option("--config", opt_config, "JSON config file; flags override its values");
  };

  std::string arg_monoid = "power", arg_element, arg_which = "all";
  std::string arg_group = "C3", arg_target = "{2,3}";
  std::vector<std::string> arg_certify, arg_qs;

  auto* sc_lengths = app.add_subcommand("lengths", "length set of one element of a chosen monoid");
  sc_lengths->add_option("--monoid", arg_monoid, "power | plane | freeplane | staircase | zerosum:<group>")
      ->capture_default_str();
  sc_lengths->add_option("element", arg_element, "element literal, e.g. {0,2,3} or (3,4) or a[2]")
      ->required();
  add_common(sc_lengths);

  auto* sc_atoms = app.add_subcommand("atoms", "list the atoms inside a bounded window");
  sc_atoms->add_option("--monoid", arg_monoid, "power | plane | freeplane | zerosum:<group>")
      ->capture_default_str();
  add_common(sc_atoms);

  auto* sc_unions = app.add_subcommand("unions", "union of all window length sets containing k");
  sc_unions->add_option("--monoid", arg_monoid, "power | plane | zerosum:<group>")->capture_default_str();
  add_common(sc_unions);

  auto* sc_certify = app.add_subcommand("certify-atom", "atom / non-atom certificate for an ideal");
  sc_certify->add_option("target", arg_certify, "family literals (a[k], b[i], c[m], cprime) or <f1; f2>")
      ->required();
  add_common(sc_certify);

  auto* sc_ident = app.add_subcommand("verify-identities", "product identity suite on a parameter grid");
  add_common(sc_ident);

  auto* sc_t51 = app.add_subcommand("theorem51", "certified length sets of the corner-ideal powers a[k]");
  add_common(sc_t51);

  auto* sc_wit = app.add_subcommand("witnesses", "structural counterexample bundles");
  sc_wit->add_option("which", arg_which, "not-transfer-krull | non-ff | u2 | all")->capture_default_str();
  add_common(sc_wit);

  auto* sc_elastic = app.add_subcommand("elastic", "ideal with prescribed elasticity q");
  sc_elastic->add_option("q", arg_qs, "target rationals, e.g. 3/2 5/3 (default: 3/2 5/3 7/4 9/5)");
  add_common(sc_elastic);

  auto* sc_iso = app.add_subcommand("powermonoid-iso",
                                    "embedding of the reduced power monoid into monomial ideals");
  add_common(sc_iso);

  auto* sc_zs = app.add_subcommand("zerosum", "zero-sum realizer plus elasticity gap scan");
  sc_zs->add_option("--group", arg_group, "gap-scan group, e.g. C3 or C2xC2")->capture_default_str();
  sc_zs->add_option("target", arg_target, "length set to realize over Z")->capture_default_str();
  add_common(sc_zs);

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    if (opt_config) {
      std::ifstream in(*opt_config);
      if (!in) throw std::invalid_argument("cannot open config file " + *opt_config);
      json j = json::parse(in);
      apply_caps(cfg, j, "config file " + *opt_config);
    }
    if (const char* env = std::getenv("IDEALARITH_CAPS"))
      apply_caps(cfg, json::parse(env), "IDEALARITH_CAPS");
    json flag_caps = json::object();
    if (opt_k) flag_caps["k"] = *opt_k;
    if (opt_max) flag_caps["max"] = *opt_max;
    if (opt_degree) flag_caps["degree"] = *opt_degree;
    if (opt_pattern) flag_caps["pattern_budget"] = *opt_pattern;
    if (opt_seed) flag_caps["seed"] = *opt_seed;
    if (opt_out) flag_caps["out"] = *opt_out;
    if (opt_format) flag_caps["format"] = *opt_format;
    apply_caps(cfg, flag_caps, "flags");

    Report rep;
    std::string subcommand;
    if (sc_lengths->parsed()) {
      subcommand = "lengths";
      run_lengths(rep, cfg, arg_monoid, arg_element);
    } else if (sc_atoms->parsed()) {
      subcommand = "atoms";
      run_atoms(rep, cfg, arg_monoid);
    } else if (sc_unions->parsed()) {
      subcommand = "unions";
      run_unions(rep, cfg, arg_monoid);
    } else if (sc_certify->parsed()) {
      subcommand = "certify-atom";
      run_certify(rep, cfg, arg_certify);
    } else if (sc_ident->parsed()) {
      subcommand = "verify-identities";
      run_identities(rep, cfg);
    } else if (sc_t51->parsed()) {
      subcommand = "theorem51";
      run_theorem51(rep, cfg);
    } else if (sc_wit->parsed()) {
      subcommand = "witnesses";
      run_witnesses(rep, cfg, arg_which);
    } else if (sc_elastic->parsed()) {
      subcommand = "elastic";
      run_elastic(rep, cfg, arg_qs);
    } else if (sc_iso->parsed()) {
      subcommand = "powermonoid-iso";
      run_power_iso(rep, cfg);
    } else if (sc_zs->parsed()) {
      subcommand = "zerosum";
      run_zerosum(rep, cfg, arg_group, arg_target);
    } else {
      throw std::logic_error("no subcommand parsed");
    }

    std::string body = rep.render(cfg, subcommand);
    if (cfg.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write report to " + cfg.out);
      out << body;
      out.close();
      std::cout << "report: " << rep.size() << " experiments, " << rep.failures() << " failures -> "
                << cfg.out << "\n";
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
