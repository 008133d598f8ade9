#include "ips/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ips/bounds.hpp"
#include "ips/datasets.hpp"
#include "ips/io.hpp"
#include "ips/weeding.hpp"

namespace ips::cli {

namespace {

using nlohmann::json;

json num(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return to_string(v);
}

json num(const BigRat& v) {
  if (v.get_den() == 1) return num(v.get_num());
  return to_string(v);
}

std::string rat_text(const BigRat& v) { return to_string(v); }

std::string point_text(const GridPointSet& set, std::size_t i) {
  const auto& p = set.points()[i];
  return "#" + std::to_string(i) + " (" + to_string(p.a) + ", " + to_string(p.b) + ")";
}

std::string summary_line(const VerificationReport& rep) {
  std::ostringstream os;
  if (rep.characteristic) {
    os << "characteristic " << to_string(*rep.characteristic);
  } else {
    os << "characteristic undefined";
  }
  os << ", diameter " << (rep.diameter ? rat_text(*rep.diameter) : "sqrt(" + rat_text(rep.diameter_squared) + ")");
  os << ", " << to_string(rep.shape);
  os << ", " << to_string(rep.position);
  return os.str();
}

std::optional<Position> parse_position(const std::string& s) {
  if (s == "any") return Position::Any;
  if (s == "semi-general" || s == "semi_general") return Position::SemiGeneral;
  if (s == "general") return Position::General;
  return std::nullopt;
}

std::optional<CharFilter> parse_char_class(const std::string& s) {
  if (s == "all") return CharFilter::all();
  if (s == "4k1,4k2" || s == "4k2,4k1" || s == "not-4k3") return CharFilter::mod4_one_or_two();
  if (s == "4k3") return CharFilter::mod4_three();
  if (s.rfind("q=", 0) == 0) {
    try {
      const BigInt q = parse_bigint(s.substr(2));
      if (q.fits_slong_p()) return CharFilter::fixed(q.get_si());
    } catch (const IpsError&) {
    }
  }
  return std::nullopt;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& require, bool as_json, std::ostream& out,
               std::ostream& err) {
  if (!require.empty() && require != "semi-general" && require != "general") {
    err << "error: --require takes semi-general or general\n";
    return kExitUsage;
  }
  std::optional<PointSetFile> file;
  try {
    file = read_point_set_file(path);
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  VerificationReport rep;
  try {
    rep = classify(file->set);
  } catch (const IpsError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitFailed;
  }
  bool ok = rep.is_integral;
  if (require == "semi-general") ok = ok && rep.semi_general;
  if (require == "general") ok = ok && rep.general;

  if (as_json) {
    json j = report_to_json(rep, file->set);
    j["file"] = path;
    if (file->name) j["name"] = *file->name;
    j["require"] = require.empty() ? "integral" : require;
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "file: " << path << '\n';
    if (file->name) out << "name: " << *file->name << '\n';
    out << report_to_text(rep, file->set);
    out << "requirement: " << (require.empty() ? "integral" : require) << '\n';
    out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

// --- char -------------------------------------------------------------------

int cmd_char(const std::vector<std::string>& sides, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    const IntTriangle t(parse_bigint(sides.at(0)), parse_bigint(sides.at(1)), parse_bigint(sides.at(2)));
    const BigInt q = triangle_char(t);
    const BigInt m4 = q % 4, m8 = q % 8;
    if (as_json) {
      out << json{{"sides", {num(t.a), num(t.b), num(t.c)}},
                  {"heron16", num(t.heron16())},
                  {"characteristic", num(q)},
                  {"mod4", num(m4)},
                  {"mod8", num(m8)}}
                 .dump(2)
          << '\n';
    } else {
      out << "sides: " << to_string(t.a) << ' ' << to_string(t.b) << ' ' << to_string(t.c) << '\n';
      out << "16*S^2: " << to_string(t.heron16()) << '\n';
      out << "characteristic: " << to_string(q) << '\n';
      out << "q mod 4: " << to_string(m4) << '\n';
      out << "q mod 8: " << to_string(m8) << '\n';
    }
    return kExitOk;
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// --- curves -----------------------------------------------------------------

int cmd_curves(std::int64_t m, std::int64_t index, std::int64_t max_radius, const std::string& q_opt,
               const std::string& char_class, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    const ErdosCurve curve(m, index);
    std::optional<BigInt> fixed;
    if (!q_opt.empty()) fixed = parse_bigint(q_opt);
    std::optional<CharFilter> cls;
    if (!char_class.empty()) {
      cls = parse_char_class(char_class);
      if (!cls) {
        err << "error: unknown --char-class '" << char_class << "'\n";
        return kExitUsage;
      }
    }
    auto pts = enumerate_curve_points(curve, max_radius, fixed);
    if (cls) {
      std::erase_if(pts, [&](const CurvePoint& p) { return !p.radicand.fits_slong_p() || !cls->admits(p.radicand.get_si()); });
    }
    if (as_json) {
      json rows = json::array();
      for (const auto& p : pts) {
        rows.push_back({{"k", p.k}, {"l", p.l}, {"a", num(p.a)}, {"b", num(p.b)}, {"denom", p.denom}, {"q", num(p.radicand)}});
      }
      out << json{{"edge", m}, {"index", index}, {"max_radius", max_radius}, {"points", rows}}.dump(2) << '\n';
    } else {
      out << "# curve " << index << " of edge " << m << "; point = (a/denom, b*sqrt(q)/denom)\n";
      out << "# k l a b denom q\n";
      for (const auto& p : pts) {
        out << p.k << ' ' << p.l << ' ' << to_string(p.a) << ' ' << to_string(p.b) << ' ' << p.denom << ' '
            << to_string(p.radicand) << '\n';
      }
      out << "# " << pts.size() << " point(s)\n";
    }
    return kExitOk;
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// --- bounds -----------------------------------------------------------------

int cmd_bounds(std::int64_t n, const std::string& d_opt, bool as_json, std::ostream& out, std::ostream& err) {
  try {
    std::optional<BigInt> d;
    if (!d_opt.empty()) d = parse_bigint(d_opt);
    bool all_pass = true;
    json rows = json::array();
    std::ostringstream text;
    text << std::left << std::setw(20) << "variant" << std::setw(18) << "bound" << std::setw(16) << "min integer d";
    if (d) text << "d = " << to_string(*d);
    text << '\n';
    for (auto v : kAllBoundVariants) {
      const double approx = bound_value(v, n);
      const BigInt min_d = min_integer_diameter(v, n);
      json row{{"variant", std::string(to_string(v))}, {"bound", approx}, {"min_integer_diameter", num(min_d)}};
      std::ostringstream b;
      b << std::setprecision(10) << approx;
      text << std::left << std::setw(20) << to_string(v) << std::setw(18) << b.str() << std::setw(16) << to_string(min_d);
      if (d) {
        const bool pass = satisfies_bound(v, n, *d);
        all_pass = all_pass && pass;
        row["satisfied"] = pass;
        text << (pass ? "pass" : "FAIL");
      }
      text << '\n';
      rows.push_back(row);
    }
    std::optional<KnownDiameter> known;
    try {
      known = known_min_diameter(n);
    } catch (const IpsError&) {
    }
    if (as_json) {
      json j{{"n", n}, {"bounds", rows}};
      if (d) j["d"] = num(*d);
      if (known) j["known_min_diameter"] = {{"value", known->value}, {"strict_lower_bound", known->strict_lower_bound}};
      out << j.dump(2) << '\n';
    } else {
      out << "n = " << n << '\n' << text.str();
      if (known) {
        out << "known minimum diameter (no three collinear): " << (known->strict_lower_bound ? "> " : "") << known->value
            << '\n';
      }
    }
    return all_pass ? kExitOk : kExitFailed;
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  std::int64_t max_diam = 0;
  std::string position = "general";
  std::string char_class = "all";
  std::string q;
  bool no_weeding = false;
  bool inventory = false;
  bool compare = false;
  unsigned workers = 0;
  std::string out_dir = "ips_witnesses";
  bool no_files = false;
  bool json = false;
};

json outcome_json(const SearchOutcome& o, const std::vector<std::string>& paths) {
  json w = json::array();
  for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
    const auto& x = o.witnesses[i];
    json e{{"diameter", x.diameter}, {"min_edge", x.min_edge}, {"characteristic", x.characteristic},
           {"q", num(x.set.radicand())}, {"denom", num(x.set.denom())}};
    json pts = json::array();
    for (const auto& p : x.set.points()) pts.push_back({num(p.a), num(p.b)});
    e["points"] = pts;
    if (i < paths.size()) e["file"] = paths[i];
    w.push_back(e);
  }
  json j{{"witnesses", w}, {"stats", stats_to_json(o.stats)}};
  j["min_diameter"] = o.min_diameter ? json(*o.min_diameter) : json(nullptr);
  return j;
}

void stats_text(const SearchStats& s, std::ostream& out, const std::string& indent) {
  out << indent << "curve indices examined: " << s.curve_indices_examined << '\n'
      << indent << "curve indices pruned by weeding: " << s.curve_indices_pruned << '\n'
      << indent << "candidate points evaluated: " << s.candidate_points << '\n'
      << indent << "pool points: " << s.pool_points << '\n'
      << indent << "compatibility tests: " << s.compatibility_tests << '\n'
      << indent << "cliques completed: " << s.cliques_completed << '\n'
      << indent << "work units: " << s.work_units << '\n';
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchProblem p;
  p.cardinality = a.n;
  p.diameter_ceiling = a.max_diam;
  const auto pos = parse_position(a.position);
  if (!pos) {
    err << "error: --position takes any, semi-general or general\n";
    return kExitUsage;
  }
  p.position = *pos;
  const auto cls = parse_char_class(a.q.empty() ? a.char_class : "q=" + a.q);
  if (!cls) {
    err << "error: --char-class takes all, 4k1,4k2, 4k3 or q=<N>\n";
    return kExitUsage;
  }
  p.char_filter = *cls;
  p.pruning = a.no_weeding ? Pruning::WeedingOff : Pruning::WeedingOn;
  p.mode = a.inventory ? SearchMode::Inventory : SearchMode::Minimum;
  p.workers = a.workers;
  if (p.workers == 0) {
    if (const char* env = std::getenv("IPS_WORKERS")) p.workers = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (p.workers == 0) p.workers = 1;

  try {
    if (a.compare) {
      const auto rep = pruning_report(p);
      if (a.json) {
        out << json{{"identical", rep.identical},
                    {"weeding_on", outcome_json(rep.with_weeding, {})},
                    {"weeding_off", outcome_json(rep.without_weeding, {})}}
                   .dump(2)
            << '\n';
      } else {
        auto md = [](const SearchOutcome& o) { return o.min_diameter ? std::to_string(*o.min_diameter) : "none"; };
        out << "weeding on:  minimum diameter " << md(rep.with_weeding) << ", " << rep.with_weeding.witnesses.size()
            << " witness(es)\n";
        stats_text(rep.with_weeding.stats, out, "  ");
        out << "weeding off: minimum diameter " << md(rep.without_weeding) << ", "
            << rep.without_weeding.witnesses.size() << " witness(es)\n";
        stats_text(rep.without_weeding.stats, out, "  ");
        out << "identical outcome: " << (rep.identical ? "yes" : "no") << '\n';
      }
      return rep.identical ? kExitOk : kExitFailed;
    }

    const auto o = solve(p);
    std::vector<std::string> paths;
    if (!a.no_files && !o.witnesses.empty()) {
      std::filesystem::create_directories(a.out_dir);
      for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
        const auto& w = o.witnesses[i];
        const std::string name = "n" + std::to_string(p.cardinality) + "_d" + std::to_string(w.diameter) + "_" +
                                 std::to_string(i + 1);
        const std::string path = (std::filesystem::path(a.out_dir) / (name + ".ips")).string();
        write_point_set_file(path, PointSetFile{kFormatVersion, name, "exhaustive search", {}, w.set});
        paths.push_back(path);
      }
    }
    if (a.json) {
      json j = outcome_json(o, paths);
      j["problem"] = {{"n", p.cardinality}, {"max_diam", p.diameter_ceiling}, {"position", to_string(p.position)},
                      {"char_class", p.char_filter.str()}, {"weeding", !a.no_weeding}, {"inventory", a.inventory}};
      out << j.dump(2) << '\n';
    } else {
      out << "problem: n=" << p.cardinality << " position=" << to_string(p.position)
          << " char-class=" << p.char_filter.str() << " weeding=" << (a.no_weeding ? "off" : "on")
          << " max-diam=" << p.diameter_ceiling << (a.inventory ? " (inventory)" : "") << '\n';
      if (o.min_diameter) {
        out << "minimum diameter: " << *o.min_diameter << '\n';
      } else {
        out << "no conforming set with diameter <= " << p.diameter_ceiling << '\n';
      }
      out << "witnesses: " << o.witnesses.size() << '\n';
      for (std::size_t i = 0; i < o.witnesses.size(); ++i) {
        const auto& w = o.witnesses[i];
        out << "  diameter " << w.diameter << ", shortest edge " << w.min_edge << ", characteristic "
            << w.characteristic;
        if (i < paths.size()) out << " -> " << paths[i];
        out << '\n';
      }
      out << "stats:\n";
      stats_text(o.stats, out, "  ");
    }
    return o.min_diameter ? kExitOk : kExitFailed;
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

// --- examples ---------------------------------------------------------------

int cmd_examples(const std::string& name, bool list, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  if (list || name.empty()) {
    for (const auto& ds : embedded_datasets()) {
      out << std::left << std::setw(16) << ds.name << std::setw(28) << dataset_status(ds) << ds.description << '\n';
    }
    return kExitOk;
  }
  try {
    const auto& ds = find_dataset(name);
    if (out_path.empty()) {
      out << serialize_point_set(ds.file);
    } else {
      write_point_set_file(out_path, ds.file);
      out << "wrote " << out_path << '\n';
    }
    return kExitOk;
  } catch (const IpsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

json report_to_json(const VerificationReport& rep, const GridPointSet& set) {
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back({{"kind", to_string(x.kind)}, {"points", x.indices}});
  json j{{"cardinality", rep.cardinality},
         {"is_integral", rep.is_integral},
         {"q", num(set.radicand())},
         {"denom", num(set.denom())},
         {"diameter_squared", num(rep.diameter_squared)},
         {"position", to_string(rep.position)},
         {"semi_general", rep.semi_general},
         {"general", rep.general},
         {"restricted_class", rep.restricted_class},
         {"shape", to_string(rep.shape)},
         {"max_points_on_line", rep.max_points_on_line},
         {"collinear_triples", rep.collinear_triples},
         {"concircular_quadruples", rep.concircular_quadruples},
         {"violations", v}};
  json pts = json::array();
  for (const auto& p : set.points()) pts.push_back({num(p.a), num(p.b)});
  j["points"] = pts;
  j["characteristic"] = rep.characteristic ? num(*rep.characteristic) : json(nullptr);
  j["diameter"] = rep.diameter ? num(*rep.diameter) : json(nullptr);
  j["rails_split"] = rep.rails_split ? json{rep.rails_split->first, rep.rails_split->second} : json(nullptr);
  if (rep.characteristic) {
    j["characteristic_mod4"] = num(BigInt(*rep.characteristic % 4));
    j["characteristic_mod8"] = num(BigInt(*rep.characteristic % 8));
  }
  return j;
}

std::string report_to_text(const VerificationReport& rep, const GridPointSet& set) {
  std::ostringstream os;
  os << "points: " << rep.cardinality << '\n';
  os << "grid: q = " << to_string(set.radicand()) << ", denom = " << to_string(set.denom()) << '\n';
  os << "integral: " << (rep.is_integral ? "yes" : "no") << '\n';
  if (rep.characteristic) {
    os << "characteristic: " << to_string(*rep.characteristic) << " (mod 4 = " << to_string(BigInt(*rep.characteristic % 4))
       << ", mod 8 = " << to_string(BigInt(*rep.characteristic % 8)) << ")\n";
  } else {
    os << "characteristic: undefined\n";
  }
  os << "diameter: " << (rep.diameter ? rat_text(*rep.diameter) : "sqrt(" + rat_text(rep.diameter_squared) + ")") << '\n';
  os << "diameter squared: " << rat_text(rep.diameter_squared) << '\n';
  os << "position: " << to_string(rep.position) << " (collinear triples: " << rep.collinear_triples
     << ", concircular quadruples: " << rep.concircular_quadruples << ")\n";
  os << "semi-general: " << (rep.semi_general ? "yes" : "no") << '\n';
  os << "general: " << (rep.general ? "yes" : "no") << '\n';
  os << "restricted class (semi-general, characteristic not 4k+3): " << (rep.restricted_class ? "yes" : "no") << '\n';
  os << "shape: " << to_string(rep.shape);
  if (rep.rails_split) os << " (two parallel lines: " << rep.rails_split->first << " + " << rep.rails_split->second << ")";
  os << '\n';
  os << "max points on a line: " << rep.max_points_on_line << '\n';
  constexpr std::size_t kShown = 20;
  std::size_t shown = 0;
  std::size_t non_integral = 0;
  for (const auto& v : rep.violations) non_integral += v.kind == ViolationKind::NonIntegral;
  os << "violations: " << rep.violations.size() << '\n';
  // Integrality failures first; they decide the exit code.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& v : rep.violations) {
      if ((v.kind == ViolationKind::NonIntegral) != (pass == 0) || shown == kShown) continue;
      ++shown;
      os << "  " << to_string(v.kind) << ':';
      for (auto i : v.indices) os << ' ' << point_text(set, i);
      if (v.kind == ViolationKind::NonIntegral) {
        os << " distance^2 = " << rat_text(pair_distance(set, v.indices[0], v.indices[1]).squared);
      }
      os << '\n';
    }
  }
  if (rep.violations.size() > shown) os << "  ... " << rep.violations.size() - shown << " more\n";
  os << "summary: " << summary_line(rep) << '\n';
  return os.str();
}

json stats_to_json(const SearchStats& s) {
  return {{"curve_indices_examined", s.curve_indices_examined},
          {"curve_indices_pruned", s.curve_indices_pruned},
          {"candidate_points", s.candidate_points},
          {"pool_points", s.pool_points},
          {"compatibility_tests", s.compatibility_tests},
          {"cliques_completed", s.cliques_completed},
          {"work_units", s.work_units}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for planar integral point sets", "ips"};
  app.require_subcommand(1);
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "verify a point-set file");
  std::string path, require;
  verify->add_option("path", path, "point-set file")->required();
  verify->add_option("--require", require, "also require semi-general or general position");
  verify->add_flag("--json", as_json, "JSON output");

  auto* chr = app.add_subcommand("char", "characteristic of an integer triangle");
  std::vector<std::string> sides;
  chr->add_option("sides", sides, "three side lengths")->required()->expected(3);
  chr->add_flag("--json", as_json, "JSON output");

  auto* curves = app.add_subcommand("curves", "integer points on an Erdos curve");
  std::int64_t m = 0, index = 0, max_radius = 0;
  std::string q_opt, cc_opt;
  curves->add_option("m", m, "edge length")->required();
  curves->add_option("index", index, "curve index, |index| < m")->required();
  curves->add_option("max_radius", max_radius, "largest distance to the first endpoint")->required();
  curves->add_option("--q", q_opt, "only points of this characteristic");
  curves->add_option("--char-class", cc_opt, "all, 4k1,4k2, 4k3 or q=<N>");
  curves->add_flag("--json", as_json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "diameter lower bounds for n points");
  std::int64_t bn = 0;
  std::string bd;
  bounds->add_option("n", bn, "cardinality")->required();
  bounds->add_option("--d", bd, "diameter to check against every bound");
  bounds->add_flag("--json", as_json, "JSON output");

  auto* search = app.add_subcommand("search", "exhaustive minimal-diameter search");
  SearchArgs sa;
  search->add_option("--n", sa.n, "cardinality")->required();
  search->add_option("--max-diam", sa.max_diam, "diameter ceiling")->required();
  search->add_option("--position", sa.position, "any, semi-general or general");
  search->add_option("--char-class", sa.char_class, "all, 4k1,4k2, 4k3 or q=<N>");
  search->add_option("--q", sa.q, "fixed characteristic (same as --char-class q=<N>)");
  search->add_flag("--no-weeding", sa.no_weeding, "disable parity pruning");
  search->add_flag("--inventory", sa.inventory, "collect every set up to the ceiling");
  search->add_flag("--compare-weeding", sa.compare, "run with and without weeding and compare");
  search->add_option("--workers", sa.workers, "worker threads (default: IPS_WORKERS or 1)");
  search->add_option("--out-dir", sa.out_dir, "directory for witness files");
  search->add_flag("--no-files", sa.no_files, "do not write witness files");
  search->add_flag("--json", sa.json, "JSON output");

  auto* examples = app.add_subcommand("examples", "embedded published point sets");
  std::string ex_name, ex_out;
  bool ex_list = false;
  examples->add_option("name", ex_name, "dataset name");
  examples->add_flag("--list", ex_list, "list datasets");
  examples->add_option("--out", ex_out, "write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(path, require, as_json, out, err);
  if (chr->parsed()) return cmd_char(sides, as_json, out, err);
  if (curves->parsed()) return cmd_curves(m, index, max_radius, q_opt, cc_opt, as_json, out, err);
  if (bounds->parsed()) return cmd_bounds(bn, bd, as_json, out, err);
  if (search->parsed()) return cmd_search(sa, out, err);
  if (examples->parsed()) return cmd_examples(ex_name, ex_list, ex_out, out, err);
  return kExitUsage;
}

}  // namespace ips::cli
