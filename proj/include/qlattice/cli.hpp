#pragma once

// Command-line front end. Kept header-only so tests can drive run_cli()
// in-process; tools/qlattice.cpp is a thin main() around it.

#include "qlattice/cyclic.hpp"
#include "qlattice/distributions.hpp"
#include "qlattice/gaussian.hpp"
#include "qlattice/numbertheory.hpp"
#include "qlattice/paths.hpp"
#include "qlattice/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qlattice::cli {

/// Stable exit-code contract.
enum ExitCode : int { kSuccess = 0, kUsage = 1, kVerdictFailure = 2, kResourceLimit = 3 };

enum class Format { Table, Json, Csv, Svg };

struct RenderSpec {
  Format format = Format::Table;
  std::string output;  // empty: standard output
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const std::map<std::string, Format>& format_names() {
  static const std::map<std::string, Format> names{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}, {"svg", Format::Svg}};
  return names;
}

inline void add_render_options(CLI::App* cmd, RenderSpec& spec) {
  cmd->add_option("--format,-f", spec.format, "table | json | csv | svg")
      ->transform(CLI::CheckedTransformer(format_names(), CLI::ignore_case));
  cmd->add_option("--output,-o", spec.output, "Write to this file instead of standard output");
}

inline void require_format(const RenderSpec& spec, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed) {
    if (spec.format == f) return;
  }
  throw UsageError(std::string("format not supported by '") + command + "'");
}

inline void emit(const RenderSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(spec.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + spec.output);
  file << text;
}

inline Mode parse_mode(const std::string& name) {
  if (name == "oracle") return Mode::Oracle;
  if (name == "poly") return Mode::Poly;
  throw UsageError("mode must be oracle or poly, got " + name);
}

inline std::string render_distribution(const ResidueDistribution& d, const RenderSpec& spec, const char* command) {
  require_format(spec, {Format::Table, Format::Json, Format::Csv}, command);
  switch (spec.format) {
    case Format::Json: return render::distribution_json(d).dump(2) + "\n";
    case Format::Csv: return render::distribution_csv(d);
    default: return render::distribution_table(d);
  }
}

// ---------------------------------------------------------------------------

struct QbinomArgs {
  std::int64_t n = 0, k = 0;
  std::optional<std::int64_t> mod;
  bool expect_uniform = false;
  RenderSpec render;
};

inline int run_qbinom(const QbinomArgs& a, std::ostream& out) {
  if (a.n < 0 || a.k < 0 || a.k > a.n) throw UsageError("qbinom: need 0 <= k <= n");
  if (a.mod && *a.mod < 1) throw UsageError("qbinom: --mod must be >= 1");
  require_format(a.render, {Format::Table, Format::Json, Format::Csv}, "qbinom");
  const Polynomial f = gauss_binom(a.n, a.k);
  std::optional<std::vector<BigInt>> sums;
  bool equal = false, divides = false;
  if (a.mod) {
    sums = content_sums(f, *a.mod);
    equal = has_equal_content(f, *a.mod);
    divides = qlattice::detail::divisible_by_q_analogue(f, *a.mod);
  }

  std::string text;
  if (a.render.format == Format::Json) {
    render::Json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["coefficients"] = render::decimal_array(f.coefficients());
    if (a.mod) {
      j["mod"] = *a.mod;
      j["content_sums"] = render::decimal_array(*sums);
      j["equal_content"] = equal;
      j["divisible"] = divides;
    }
    text = j.dump(2) + "\n";
  } else if (a.render.format == Format::Csv) {
    text = "power,coefficient\n";
    for (std::size_t i = 0; i < f.size(); ++i) text += std::to_string(i) + "," + f.coefficients()[i].str() + "\n";
  } else {
    std::ostringstream os;
    os << "[" << a.n << " brack " << a.k << "]_q = " << f << "\n";
    os << "coefficients: " << render::join(f.coefficients()) << "\n";
    os << "degree: " << f.degree() << ", value at q=1: " << f.value_at_one() << "\n";
    if (a.mod) {
      os << "content sums mod " << *a.mod << ": " << render::join(*sums) << "\n";
      os << "equal content mod " << *a.mod << ": " << (equal ? "true" : "false") << "\n";
      os << "[" << *a.mod << "]_q divides: " << (divides ? "true" : "false") << "\n";
    }
    text = os.str();
  }
  emit(a.render, text, out);
  return (a.expect_uniform && a.mod && !equal) ? kVerdictFailure : kSuccess;
}

struct DistArgs {
  std::string kind;
  std::int64_t a = 0, b = 0;
  std::optional<std::int64_t> mod;
  std::string mode = "oracle";
  bool expect_uniform = false;
  bool diagnostic = false;
  RenderSpec render;
};

inline int run_dist(const DistArgs& a, const EnumerationOptions& enumeration, std::ostream& out) {
  ResidueDistribution d;
  auto need_mod = [&]() {
    if (!a.mod) throw UsageError("dist " + a.kind + ": --mod is required");
    return *a.mod;
  };
  if (a.kind == "area") {
    d = area_distribution(a.a, a.b, need_mod(), parse_mode(a.mode), enumeration);
  } else if (a.kind == "sum") {
    d = subset_sum_distribution(a.a, a.b, need_mod(), enumeration);
  } else if (a.kind == "product") {
    d = subset_product_distribution(a.a, a.b, a.diagnostic, enumeration);
  } else if (a.kind == "maj") {
    d = maj_distribution(a.a, need_mod(), enumeration);
  } else {
    throw UsageError("dist: kind must be area, sum, product or maj");
  }
  std::string text = render_distribution(d, a.render, "dist");
  if (a.kind == "product" && a.render.format == Format::Table && !product_theorem_applies(a.a, a.b)) {
    text += "note: gcd(l, p-1) > 1, product theorem does not apply (diagnostic)\n";
  }
  emit(a.render, text, out);
  return (a.expect_uniform && !d.uniform()) ? kVerdictFailure : kSuccess;
}

struct OrbitArgs {
  std::string map;
  std::string start;
  std::optional<std::int64_t> n;
  RenderSpec render;
};

template <class Map, class ToPath>
std::string render_orbit(const typename Map::element_type& start, const RenderSpec& spec, ToPath&& to_path) {
  const auto orbit = orbit_of<Map>(start);
  const auto residues = orbit.residues();
  const auto deltas = orbit.deltas();
  const char* stat_name = std::is_same_v<Map, PhiSequenceMap> ? "sum" : "area";

  if (spec.format == Format::Svg) {
    std::vector<render::SvgPanel> panels;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      panels.push_back({to_path(orbit.elements[i]), std::string(stat_name) + " " +
                                                        std::to_string(orbit.statistic_values[i])});
    }
    return render::svg_strip(panels);
  }
  if (spec.format == Format::Json) {
    render::Json j;
    j["map"] = std::string(Map::name);
    j["modulus"] = orbit.modulus;
    j["length"] = orbit.size();
    j["statistic"] = stat_name;
    render::Json items = render::Json::array();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      render::Json e;
      e["element"] = orbit.elements[i].to_string();
      e["value"] = orbit.statistic_values[i];
      e["residue"] = residues[i];
      e["delta"] = deltas[i];
      items.push_back(e);
    }
    j["elements"] = items;
    j["residues_distinct"] = orbit.residues_distinct();
    return j.dump(2) + "\n";
  }
  if (spec.format == Format::Csv) {
    std::string text = "index,element,value,residue,delta\n";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      text += std::to_string(i) + "," + orbit.elements[i].to_string() + "," +
              std::to_string(orbit.statistic_values[i]) + "," + std::to_string(residues[i]) + "," +
              std::to_string(deltas[i]) + "\n";
    }
    return text;
  }
  std::ostringstream os;
  os << Map::name << " orbit: " << orbit.size() << " elements, " << stat_name << " read mod " << orbit.modulus
     << "\n";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    os << i << "  " << orbit.elements[i].to_string() << "  " << stat_name << "=" << orbit.statistic_values[i]
       << "  residue=" << residues[i] << "  delta=" << (deltas[i] >= 0 ? "+" : "") << deltas[i] << "\n";
  }
  os << "residues distinct: " << (orbit.residues_distinct() ? "yes" : "no") << "\n";
  return os.str();
}

inline int run_orbit(const OrbitArgs& a, std::ostream& out) {
  const auto kind = parse_map_kind(a.map);
  if (!kind) throw UsageError("orbit: map must be rotate, phi-square, phi-word, phi-seq or catalan");
  auto identity = [](const LatticePath& p) { return p; };
  std::string text;
  switch (*kind) {
    case MapKind::Rotate:
      text = render_orbit<RotateMap>(LatticePath::parse(a.start), a.render, identity);
      break;
    case MapKind::PhiSquare:
      text = render_orbit<PhiSquareMap>(LatticePath::parse(a.start), a.render, identity);
      break;
    case MapKind::Catalan:
      text = render_orbit<CatalanMap>(LatticePath::parse(a.start), a.render, identity);
      break;
    case MapKind::PhiWord:
      text = render_orbit<PhiWordMap>(LatticePath::parse(a.start).to_word(), a.render,
                                      [](const BinaryWord& w) { return w.to_path(); });
      break;
    case MapKind::PhiSequence: {
      auto seq = IncreasingSequence::parse(a.start, 1, std::numeric_limits<std::int64_t>::max());
      const std::int64_t n = a.n.value_or(static_cast<std::int64_t>(seq.length()));
      if (n != static_cast<std::int64_t>(seq.length())) throw UsageError("orbit phi-seq: sequence length must equal --n");
      seq = IncreasingSequence(seq.values(), 1, 2 * n);
      // Draw the subset as the path whose North steps sit at its positions.
      auto as_path = [n](const IncreasingSequence& s) {
        std::vector<Step> steps(static_cast<std::size_t>(2 * n), Step::East);
        for (auto v : s.values()) steps[static_cast<std::size_t>(v - 1)] = Step::North;
        return LatticePath(std::move(steps));
      };
      text = render_orbit<PhiSequenceMap>(seq, a.render, as_path);
      break;
    }
  }
  emit(a.render, text, out);
  return kSuccess;
}

struct PathArgs {
  std::string path;
  RenderSpec render;
};

inline int run_path(const PathArgs& a, std::ostream& out) {
  const LatticePath p = LatticePath::parse(a.path);
  const BinaryWord w = p.to_word();
  const auto cols = column_partition(p);
  std::string text;
  if (a.render.format == Format::Svg) {
    text = render::svg_strip({{p, "area " + std::to_string(area(p))}});
  } else if (a.render.format == Format::Json) {
    render::Json j;
    j["path"] = p.to_string();
    j["word"] = w.to_string();
    j["width"] = p.width();
    j["height"] = p.height();
    j["area"] = area(p);
    j["inversions"] = inversions(w);
    j["major_index"] = major_index(w);
    j["column_partition"] = cols;
    if (p.is_square()) {
      j["exceedance"] = exceedance(p);
      j["dyck"] = is_dyck(p);
    }
    text = j.dump(2) + "\n";
  } else {
    require_format(a.render, {Format::Table}, "path");
    std::ostringstream os;
    os << "path: " << p.to_string() << "  word: " << w.to_string() << "\n";
    os << "end: (" << p.width() << "," << p.height() << ")\n";
    os << "area: " << area(p) << "  inversions: " << inversions(w) << "  major index: " << major_index(w) << "\n";
    os << "column partition:";
    for (auto c : cols) os << " " << c;
    os << "\n";
    if (p.is_square()) os << "exceedance: " << exceedance(p) << "  dyck: " << (is_dyck(p) ? "yes" : "no") << "\n";
    text = os.str();
  }
  emit(a.render, text, out);
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string scope = "all";
  std::int64_t max_n = 6;
  std::string mode = "oracle";
};

class VerifyReport {
 public:
  explicit VerifyReport(std::ostream& out) : out_(out) {}

  void check(const std::string& label, bool ok, const std::string& detail = {}) {
    ++total_;
    if (ok) ++passed_;
    out_ << (ok ? "PASS " : "FAIL ") << label;
    if (!detail.empty()) out_ << "  " << detail;
    out_ << "\n";
  }

  void verdict(const std::string& label, const TheoremVerdict& v) {
    check(label, v.pass,
          "mod " + std::to_string(v.modulus) + ", expected " + v.expected_count.str() + " per class" +
              (v.note.empty() ? "" : " (" + v.note + ")"));
  }

  int finish(bool truncated) {
    out_ << (truncated ? "partial: " : "") << passed_ << "/" << total_ << " checks passed\n";
    if (truncated) return kResourceLimit;
    return passed_ == total_ ? kSuccess : kVerdictFailure;
  }

 private:
  std::ostream& out_;
  int passed_ = 0;
  int total_ = 0;
};

inline const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> scopes{"t1", "t2", "t3", "t4", "t5", "t6", "t7",
                                               "qids", "eq1", "chung-feller", "macmahon"};
  return scopes;
}

inline void verify_scope(const std::string& scope, std::int64_t max_n, Mode mode, const EnumerationOptions& enumeration,
                         VerifyReport& report) {
  TheoremParams base;
  base.mode = mode;
  base.enumeration = enumeration;
  auto label = [](const std::string& s, const std::string& params) { return s + " " + params; };

  if (scope == "t1" || scope == "t2" || scope == "t3" || scope == "t7") {
    const TheoremId id = scope == "t1"   ? TheoremId::T1
                         : scope == "t2" ? TheoremId::T2
                         : scope == "t3" ? TheoremId::T3
                                         : TheoremId::T7;
    for (std::int64_t n = 1; n <= max_n; ++n) {
      TheoremParams p = base;
      p.n = n;
      report.verdict(label(scope, "n=" + std::to_string(n)), verify_theorem(id, p));
    }
  } else if (scope == "t4" || scope == "t6") {
    for (std::int64_t n = 2; n <= max_n; ++n) {
      for (std::int64_t k = 1; k < n; ++k) {
        if (scope == "t4" && std::gcd(n, k) != 1) continue;
        TheoremParams p = base;
        p.n = n;
        p.k = k;
        report.verdict(label(scope, "n=" + std::to_string(n) + " k=" + std::to_string(k)),
                       verify_theorem(scope == "t4" ? TheoremId::T4 : TheoremId::T6, p));
      }
    }
  } else if (scope == "t5") {
    for (std::int64_t prime = 2; prime <= max_n; ++prime) {
      if (!is_prime(static_cast<std::uint64_t>(prime))) continue;
      for (std::int64_t l = 1; l <= prime - 1; ++l) {
        if (std::gcd(l, prime - 1) != 1) continue;
        TheoremParams p = base;
        p.p = prime;
        p.l = l;
        report.verdict(label(scope, "p=" + std::to_string(prime) + " l=" + std::to_string(l)),
                       verify_theorem(TheoremId::T5, p));
      }
    }
  } else if (scope == "qids") {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const auto r = verify_q_identities(n);
      report.check(label(scope, "n=" + std::to_string(n)), r.all(),
                   std::string("factorization=") + (r.factorization ? "ok" : "bad") +
                       " catalan-difference=" + (r.catalan_difference ? "ok" : "bad") +
                       " [2n-1]_q-divides=" + (r.divisible_by_2n_minus_1 ? "ok" : "bad"));
    }
  } else if (scope == "eq1") {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      report.check(label(scope, "n=" + std::to_string(n)), verify_eq1(n),
                   "C(2n,n) = " + binomial(2 * n, n).str());
    }
  } else if (scope == "chung-feller") {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const auto counts = exceedance_counts(n, enumeration);
      const BigInt c = catalan(n);
      const bool ok = std::all_of(counts.begin(), counts.end(), [&](const BigInt& x) { return x == c; });
      report.check(label(scope, "n=" + std::to_string(n)), ok, "each exceedance value has C_n = " + c.str());
    }
  } else if (scope == "macmahon") {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const bool ok = even_word_histogram(n, [](const BinaryWord& w) { return inversions(w); }, enumeration) ==
                      even_word_histogram(n, [](const BinaryWord& w) { return major_index(w); }, enumeration);
      report.check(label(scope, "n=" + std::to_string(n)), ok, "inv and maj equidistributed");
    }
  } else {
    throw UsageError("verify: unknown scope " + scope);
  }
}

inline int run_verify(const VerifyArgs& a, const EnumerationOptions& enumeration, std::ostream& out) {
  if (a.max_n < 1) throw UsageError("verify: --max-n must be >= 1");
  const Mode mode = parse_mode(a.mode);
  std::vector<std::string> scopes;
  if (a.scope == "all") {
    scopes = verify_scopes();
  } else if (std::find(verify_scopes().begin(), verify_scopes().end(), a.scope) != verify_scopes().end()) {
    scopes = {a.scope};
  } else {
    throw UsageError("verify: unknown scope " + a.scope);
  }
  VerifyReport report(out);
  try {
    for (const auto& s : scopes) verify_scope(s, a.max_n, mode, enumeration, report);
  } catch (const ResourceLimit& e) {
    out << "resource limit: " << e.what() << "\n";
    return report.finish(true);
  }
  return report.finish(false);
}

}  // namespace detail

/**
 * Runs one CLI invocation. argv[0] is the program name. Returns the exit
 * code: 0 success, 1 usage, 2 verdict failure, 3 resource limit.
 */
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-binomial and lattice-path residue distributions", "qlattice"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for exhaustive enumeration")->check(CLI::Range(1U, 256U));

  detail::QbinomArgs qa;
  auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n brack k]_q, optionally with content sums mod m");
  qbinom->add_option("n", qa.n)->required();
  qbinom->add_option("k", qa.k)->required();
  qbinom->add_option("--mod,-m", qa.mod, "Report content sums and [m]_q divisibility");
  qbinom->add_flag("--expect-uniform", qa.expect_uniform, "Exit 2 unless the content is equal mod m");
  detail::add_render_options(qbinom, qa.render);

  detail::DistArgs da;
  auto* dist = app.add_subcommand("dist", "Residue-class distribution: area W H | sum N K | product P L | maj N");
  dist->add_option("kind", da.kind)->required()->check(CLI::IsMember({"area", "sum", "product", "maj"}));
  dist->add_option("a", da.a)->required();
  dist->add_option("b", da.b);
  dist->add_option("--mod,-m", da.mod, "Modulus (not used by product, which reads mod p)");
  dist->add_option("--mode", da.mode, "oracle (enumerate) or poly (area only)")
      ->check(CLI::IsMember({"oracle", "poly"}));
  dist->add_flag("--expect-uniform", da.expect_uniform, "Exit 2 unless every class has the same count");
  dist->add_flag("--diagnostic", da.diagnostic, "product: compute even when gcd(l, p-1) > 1");
  detail::add_render_options(dist, da.render);

  detail::OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "Orbit of a cyclic map: rotate | phi-square | phi-word | phi-seq | catalan");
  orbit->add_option("map", oa.map)->required();
  orbit->add_option("start", oa.start, "E/N path, 0/1 word, or comma-separated sequence")->required();
  orbit->add_option("--n", oa.n, "phi-seq: sequences of length n in [1, 2n]");
  detail::add_render_options(orbit, oa.render);

  detail::PathArgs pa;
  auto* path = app.add_subcommand("path", "Statistics of a single path");
  path->add_option("path", pa.path, "E/N path or 0/1 word")->required();
  detail::add_render_options(path, pa.render);

  detail::VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verification sweep: all | t1..t7 | qids | eq1 | chung-feller | macmahon");
  verify->add_option("scope", va.scope)->required();
  verify->add_option("--max-n", va.max_n, "Largest n (or p for t5) in the sweep");
  verify->add_option("--mode", va.mode, "Area theorems: oracle or poly")->check(CLI::IsMember({"oracle", "poly"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  EnumerationOptions enumeration;
  enumeration.threads = threads;

  try {
    if (*qbinom) return detail::run_qbinom(qa, out);
    if (*dist) {
      if (da.kind != "maj" && !dist->count("b")) throw UsageError("dist " + da.kind + ": two parameters required");
      if (da.mode == "poly" && da.kind != "area") throw UsageError("dist: --mode poly applies to area only");
      return detail::run_dist(da, enumeration, out);
    }
    if (*orbit) return detail::run_orbit(oa, out);
    if (*path) return detail::run_path(pa, out);
    if (*verify) return detail::run_verify(va, enumeration, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  }
  return kUsage;
}

/// Same as the argv form; args exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qlattice"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qlattice::cli
