#include "app.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cache.hpp"
#include "higgsmot/pipeline.hpp"
#include "render.hpp"

namespace higgsmot::cli {

namespace {

struct Options {
  int genus = 0;
  int rank = 1;
  int degree = 0;
  std::string format = "json";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  Limits limits;
  std::vector<std::string> suites;
};

// A small fixed pair of series for the Exp/Log identities.
std::pair<GradedSeries, GradedSeries> sample_series(const CurveModel& c) {
  GradedSeries f(3, 4), g(3, 4);
  f.set(1, 0, c.class_of_x());
  f.set(1, 1, MotClass::L());
  f.set(0, 2, MotClass::u() - MotClass(2));
  f.set(2, 3, c.pic_stack());
  g.set(0, 1, MotClass(1) / (MotClass::L() - MotClass(1)));
  g.set(1, 2, MotClass::v().scaled(3));
  g.set(3, 0, MotClass(-1));
  return {f, g};
}

void add_zeta(std::vector<Check>& out, int genus) {
  out.push_back({"zeta", "functional equation zeta(1/(Lz)) = L^{1-g} z^{2-2g} zeta(z), g=" + std::to_string(genus),
                 [genus] { return functional_equation_holds(make_curve(genus)); }});
}

void add_pleth(std::vector<Check>& out, int genus) {
  out.push_back({"pleth", "Log(Exp(f)) = f on sample series (3, 4)", [genus] {
                   const auto [f, g] = sample_series(make_curve(genus));
                   return log_pleth(exp_pleth(f)) == f && log_pleth(exp_pleth(g)) == g;
                 }});
  out.push_back({"pleth", "Exp(f + g) = Exp(f) Exp(g) on sample series (3, 4)", [genus] {
                   const auto [f, g] = sample_series(make_curve(genus));
                   return exp_pleth(f + g) == exp_pleth(f) * exp_pleth(g);
                 }});
  out.push_back({"pleth", "nilpotent cone series sum [N_l] z^l = Exp(z/(L-1)) up to z^10",
                 [] { return nilcone_identity_check(10); }});
}

void add_torsion(std::vector<Check>& out, int genus) {
  out.push_back({"torsion", "Pow(sum [N_l] z^l, [X]) = Exp([X] z/(L-1)) up to z^8, g=" + std::to_string(genus),
                 [genus] { return torsion_identity_check(make_curve(genus), 8); }});
}

void add_slope(std::vector<Check>& out, int genus) {
  out.push_back({"slope", "slope factorization of Pow(Omega, L) up to (r, d) = (3, 6), g=" + std::to_string(genus),
                 [genus] { return slope_factorization_check(make_curve(genus), 3, 6).ok; }});
}

void add_periodicity(std::vector<Check>& out, int genus) {
  for (int r : {2, 3}) {
    const int lo = std::max(r * (r - 1) * (genus - 1) + 1, 0);
    const int hi = lo + 2 * r - 1;
    out.push_back({"periodicity",
                   "H_{r,d} = H_{r,d+r} for r=" + std::to_string(r) + ", " + std::to_string(lo) + " <= d <= " +
                       std::to_string(hi) + ", g=" + std::to_string(genus),
                   [genus, r, lo, hi] { return periodicity_check(make_curve(genus), r, lo, hi); }});
  }
}

void add_harder(std::vector<Check>& out, int genus) {
  for (int r : {2, 3}) {
    for (int d : {-1, 0, 1}) {
      out.push_back({"harder",
                     "flag-stack limit equals the closed form times vol_r for r=" + std::to_string(r) +
                         ", d=" + std::to_string(d) + ", g=" + std::to_string(genus),
                     [genus, r, d] { return harder_limit_check(make_curve(genus), r, d); }});
    }
  }
}

// Answers from the cache when possible, otherwise computes and stores.
ClassDocument cached(const Options& o, const std::string& quantity, int rank, int degree, std::ostream& err,
                     const std::function<ClassDocument()>& compute) {
  std::optional<Cache> cache;
  if (!o.no_cache) cache.emplace(resolve_cache_dir(o.cache_dir));
  const std::string key = request_key(quantity, o.genus, rank, degree);
  if (cache) {
    std::string rejected;
    if (auto hit = cache->lookup(key, &rejected)) return *hit;
    if (!rejected.empty()) err << "higgsmot: ignoring cache entry: " << rejected << "\n";
  }
  ClassDocument doc = compute();
  if (cache) cache->store(key, doc);
  return doc;
}

ClassDocument mss_document(const Options& o, const std::string& quantity, int rank, int degree, std::ostream& err) {
  return cached(o, quantity, rank, degree, err, [&] {
    const CurveModel c = make_curve(o.genus);
    const MssResult res = mss_class_detailed(c, rank, degree, o.limits);
    if (!(res.value == res.witness)) {
      throw StabilizationFailure("H_{r,d+er} differs between the twists " + std::to_string(res.twist) + " and " +
                                 std::to_string(res.twist + 1));
    }
    const Truncation t{rank, degree + (res.twist + 1) * rank, res.twist};
    return make_document(quantity, o.genus, rank, degree, t, res.value);
  });
}

ClassDocument h_document(const Options& o, int rank, int degree, std::ostream& err) {
  return cached(o, "h", rank, degree, err, [&] {
    const MotClass h = h_rd(make_curve(o.genus), rank, degree, o.limits);
    return make_document("h", o.genus, rank, degree, {rank, degree, 0}, h);
  });
}

void add_common(CLI::App* sub, Options& o, bool with_rank) {
  sub->add_option("--genus,-g", o.genus, "Genus of the curve")->required()->check(CLI::NonNegativeNumber);
  if (with_rank) sub->add_option("--rank,-r", o.rank, "Rank")->required()->check(CLI::PositiveNumber);
  sub->add_option("--format,-f", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "text"}));
  sub->add_option("--cache-dir", o.cache_dir, "Cache directory (default: $HIGGSMOT_CACHE_DIR)");
  sub->add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
  sub->add_option("--max-rank", o.limits.max_rank, "Largest rank a table may reach")->check(CLI::PositiveNumber);
  sub->add_option("--max-degree", o.limits.max_degree, "Largest degree a table may reach")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zeta", "pleth", "torsion", "slope", "periodicity", "harder", "all"};
  return names;
}

std::vector<Check> suite_checks(const std::string& suite, int genus) {
  std::vector<Check> out;
  const bool all = suite == "all";
  if (all || suite == "zeta") add_zeta(out, genus);
  if (all || suite == "pleth") add_pleth(out, genus);
  if (all || suite == "torsion") add_torsion(out, genus);
  if (all || suite == "slope") add_slope(out, genus);
  if (all || suite == "periodicity") add_periodicity(out, genus);
  if (all || suite == "harder") add_harder(out, genus);
  if (out.empty()) throw InvalidArgument("unknown suite '" + suite + "'");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic classes of moduli of semistable Higgs bundles and connections on a curve", "higgsmot"};
  app.require_subcommand(1);
  Options o;

  auto* higgs = app.add_subcommand("higgs", "Class of the stack of semistable Higgs bundles of rank r, degree d");
  add_common(higgs, o, true);
  higgs->add_option("--degree,-d", o.degree, "Degree")->required();

  auto* conn = app.add_subcommand("conn", "Class of the stack of rank r bundles with connections");
  add_common(conn, o, true);

  auto* table = app.add_subcommand("table", "H_{r',d'} for 1 <= r' <= r, 0 <= d' <= d");
  add_common(table, o, true);
  table->add_option("--degree,-d", o.degree, "Largest degree")->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Check the identities the computation rests on");
  verify->add_option("--genus,-g", o.genus, "Genus of the curve")->check(CLI::NonNegativeNumber);
  verify->add_option("--suite,-s", o.suites, "Suites to run")->required()->check(CLI::IsMember(suite_names()));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "higgsmot: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    const Format format = parse_format(o.format);
    if (*higgs) {
      out << render_document(mss_document(o, "mss", o.rank, o.degree, err), format);
    } else if (*conn) {
      out << render_document(mss_document(o, "conn", o.rank, 0, err), format);
    } else if (*table) {
      if (o.rank > o.limits.max_rank || o.degree > o.limits.max_degree) {
        throw InsufficientTruncation("the table needs r_max >= " + std::to_string(o.rank) + " and d_max >= " +
                                     std::to_string(o.degree) + "; raise --max-rank/--max-degree");
      }
      std::vector<ClassDocument> docs;
      for (int r = 1; r <= o.rank; ++r) {
        for (int d = 0; d <= o.degree; ++d) docs.push_back(h_document(o, r, d, err));
      }
      out << render_table(docs, format);
    } else if (*verify) {
      bool ok = true;
      for (const auto& s : o.suites) {
        for (const auto& check : suite_checks(s, o.genus)) {
          const bool passed = check.run();
          ok = ok && passed;
          out << (passed ? "PASS " : "FAIL ") << check.suite << ": " << check.description << std::endl;
        }
      }
      return ok ? kOk : kCheckFailed;
    }
  } catch (const InsufficientTruncation& e) {
    err << "higgsmot: insufficient truncation: " << e.what() << "\n";
    return kResource;
  } catch (const CacheError& e) {
    err << "higgsmot: cache error: " << e.what() << "\n";
    return kResource;
  } catch (const InvalidArgument& e) {
    err << "higgsmot: " << e.what() << "\n";
    return kUsage;
  } catch (const NegativeGenus& e) {
    err << "higgsmot: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "higgsmot: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace higgsmot::cli
