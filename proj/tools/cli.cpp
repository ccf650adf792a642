#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "equilex/bounds.hpp"
#include "equilex/certify.hpp"
#include "equilex/construct.hpp"
#include "equilex/error.hpp"
#include "equilex/hadamard.hpp"
#include "equilex/io.hpp"
#include "equilex/search.hpp"
#include "equilex/verify.hpp"

namespace equilex::cli {

namespace {

using nlohmann::json;

struct ConstructArgs {
  std::string kind;
  double p = 0.0;
  std::size_t d = 0;
  std::size_t hadamard_order = 0;
  std::string hadamard_file;
  bool normalize = false;
  std::string out;
  std::string csv;
};

struct VerifyArgs {
  std::string file;
  double p = 0.0;
  double tol = 1e-9;
  bool sphere = false;
};

struct CertifyArgs {
  std::string file;
  double p = 0.0;
  double svd_tol = kDefaultSvdTolerance;
};

struct BoundsArgs {
  double p = 0.0;
  std::uint64_t d = 0;
  std::string format = "json";
};

struct SearchArgs {
  double p = 0.0;
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t restarts = 50;
  std::uint64_t seed = 1;
  std::size_t max_iters = SearchConfig{}.max_iters;
  std::string out;
  bool quiet = false;
};

// Usage errors raised after CLI11 has finished parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned exact_log2(std::size_t k) {
  if (k == 0 || (k & (k - 1)) != 0) {
    throw DomainError("only Sylvester orders 2^n are generated; order " + std::to_string(k) +
                      " needs --hadamard-file");
  }
  unsigned n = 0;
  while ((std::size_t{1} << n) < k) ++n;
  return n;
}

void warn_exponent(const PointSet& set, double p, std::ostream& err) {
  if (set.space().p() != p) {
    err << "warning: file was written for p = " << std::setprecision(17) << set.space().p()
        << ", checking with p = " << p << '\n';
  }
}

int do_construct(const ConstructArgs& a, std::ostream& out) {
  json prov{{"construction", a.kind}, {"p", a.p}};
  auto need_d = [&] {
    if (a.d == 0) throw UsageError("construct " + a.kind + " requires --d");
    prov["d"] = a.d;
    return a.d;
  };

  std::optional<PointSet> set;
  if (a.kind == "simplex") {
    set = standard_simplex(a.p, need_d());
  } else if (a.kind == "prop2") {
    if (a.hadamard_file.empty() == (a.hadamard_order == 0)) {
      throw UsageError("construct prop2 requires exactly one of --hadamard-order, --hadamard-file");
    }
    const HadamardMatrix h = a.hadamard_file.empty() ? sylvester(exact_log2(a.hadamard_order))
                                                     : read_hadamard_file(a.hadamard_file);
    prov["hadamard_order"] = h.order();
    if (!a.hadamard_file.empty()) prov["hadamard_file"] = a.hadamard_file;
    set = hadamard_lift(a.p, h);
  } else if (a.kind == "theorem2") {
    const std::size_t d = need_d();
    prov["hadamard_order"] = std::size_t{1} << k_of_p(a.p);
    set = theorem2_set(a.p, d);
  } else {
    if (a.d != 0 && a.d != 4) throw UsageError("construct theorem3 lives in dimension 4");
    set = theorem3_set(a.p);
  }
  if (a.normalize) set = normalize_scale(*set);
  prov["normalized"] = a.normalize;

  const PointSetDocument doc{*set, prov};
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw ParseError("cannot write " + a.csv);
    write_csv(csv, doc.set);
  }
  if (a.out.empty()) {
    out << to_json(doc).dump(2) << '\n';
  } else {
    write_point_set(a.out, doc);
    out << "wrote " << doc.set.size() << " points in l_p^" << doc.set.dim() << " to " << a.out
        << '\n';
  }
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const PointSetDocument doc = read_point_set(a.file);
  warn_exponent(doc.set, a.p, err);
  const EquilateralReport rep = check_equilateral(doc.set.with_exponent(a.p), a.tol, a.sphere);
  out << to_json(rep).dump(2) << '\n';
  return rep.pass ? kOk : kCheckFailed;
}

int do_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const PointSetDocument doc = read_point_set(a.file);
  warn_exponent(doc.set, a.p, err);
  const RankCertificate cert = certify_rank(doc.set, a.p, a.svd_tol);
  out << to_json(cert).dump(2) << '\n';
  return cert.certified ? kOk : kCheckFailed;
}

void print_bounds_table(const BoundsReport& r, std::ostream& out) {
  out << "p = " << std::setprecision(17) << r.p << ", d = " << r.d << '\n';
  for (const auto& b : r.lower_bounds) out << "  lower  " << std::setw(20) << b.value << "  " << b.source << '\n';
  for (const auto& b : r.upper_bounds) out << "  upper  " << std::setw(20) << b.value << "  " << b.source << '\n';
  if (r.exact) {
    out << "  exact value: " << r.best_lower << '\n';
  } else {
    out << "  " << r.best_lower << " <= e <= ";
    if (r.best_upper) {
      out << *r.best_upper << '\n';
    } else {
      out << "?\n";
    }
  }
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

int do_bounds(const BoundsArgs& a, std::ostream& out) {
  const BoundsReport r = bounds_report(a.p, a.d);
  if (a.format == "table") {
    print_bounds_table(r, out);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  return kOk;
}

int do_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.p = a.p;
  cfg.dim = a.d;
  cfg.n = a.n;
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  cfg.max_iters = a.max_iters;
  const SearchResult res = run_search(cfg);
  if (!a.quiet) {
    for (const auto& l : res.log) {
      err << "restart " << l.restart << " energy " << std::setprecision(6) << std::scientific
          << l.energy << std::defaultfloat << " iterations " << l.iterations << '\n';
    }
  }
  if (!a.out.empty()) {
    json prov{{"construction", "search"}, {"p", a.p},       {"d", a.d},
              {"n", a.n},                 {"seed", a.seed}, {"restarts", a.restarts},
              {"best_energy", res.best_energy}};
    write_point_set(a.out, PointSetDocument{res.best_points, prov});
  }
  out << to_json(res).dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilateral sets in l_p^d: constructions, verification, bounds and search",
               "equilex"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build an equilateral set");
  construct->add_option("kind", ca.kind, "simplex | prop2 | theorem2 | theorem3")
      ->required()
      ->check(CLI::IsMember({"simplex", "prop2", "theorem2", "theorem3"}));
  construct->add_option("--p", ca.p, "Exponent p > 1")->required();
  construct->add_option("--d", ca.d, "Ambient dimension");
  construct->add_option("--hadamard-order", ca.hadamard_order, "Sylvester order 2^n (prop2)");
  construct->add_option("--hadamard-file", ca.hadamard_file, "Hadamard matrix text file (prop2)");
  construct->add_flag("--normalize", ca.normalize, "Rescale to pairwise distance 1");
  construct->add_option("--out", ca.out, "Write the point set JSON here");
  construct->add_option("--csv", ca.csv, "Also write a headerless CSV");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check that a point set is equilateral");
  verify->add_option("file", va.file, "Point set JSON")->required();
  verify->add_option("--p", va.p, "Exponent used for distances")->required();
  verify->add_option("--tol", va.tol, "Relative tolerance")->capture_default_str();
  verify->add_flag("--sphere", va.sphere, "Also require unit norms");

  CertifyArgs cea;
  auto* certify = app.add_subcommand("certify", "Rank certificate for even integer p");
  certify->add_option("file", cea.file, "Point set JSON")->required();
  certify->add_option("--p", cea.p, "Even integer exponent")->required();
  certify->add_option("--svd-tol", cea.svd_tol, "Relative singular value threshold")
      ->capture_default_str();

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Known bounds on the largest equilateral set");
  bounds->add_option("--p", ba.p, "Exponent p > 1")->required();
  bounds->add_option("--d", ba.d, "Dimension")->required();
  bounds->add_option("--format", ba.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Random-restart energy minimization");
  search->add_option("--p", sa.p, "Exponent p > 1")->required();
  search->add_option("--d", sa.d, "Dimension")->required();
  search->add_option("--n", sa.n, "Number of points")->required();
  search->add_option("--restarts", sa.restarts, "Random restarts")->capture_default_str();
  search->add_option("--seed", sa.seed, "Base seed")->capture_default_str();
  search->add_option("--max-iters", sa.max_iters, "Iterations per restart")->capture_default_str();
  search->add_option("--out", sa.out, "Write the best point set JSON here");
  search->add_flag("--quiet", sa.quiet, "Suppress per-restart log lines");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kUsage;
  }

  try {
    if (*construct) return do_construct(ca, out);
    if (*verify) return do_verify(va, out, err);
    if (*certify) return do_certify(cea, out, err);
    if (*bounds) return do_bounds(ba, out);
    if (*search) return do_search(sa, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace equilex::cli
