#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/report.hpp"
#include "cli/svg.hpp"
#include "modhyp/analysis.hpp"
#include "modhyp/cardinality.hpp"
#include "modhyp/errors.hpp"
#include "modhyp/hyperbola.hpp"

namespace modhyp::cli {

namespace {

struct Globals {
  unsigned threads = 0;  // 0 defers to MODHYP_THREADS / hardware count
  u64 budget = kDefaultBudget;
  std::string format = "table";

  EnumerationOptions enumeration() const { return {budget, threads}; }
  Format fmt() const { return parse_format(format); }
};

// Shared by enumerate/card/coverage/plot.
struct SpecArgs {
  unsigned d = 2;
  unsigned m = 2;
  i64 a = 1;
  u64 n = 2;
};

void add_spec(CLI::App* sub, SpecArgs& s, bool with_dm, bool dm_required) {
  if (with_dm) {
    auto* d = sub->add_option("--d", s.d, "dimension d >= 2");
    auto* m = sub->add_option("--m", s.m, "number of plus signs, 0 <= m <= d");
    if (dm_required) {
      d->required();
      m->required();
    }
  }
  sub->add_option("--a", s.a, "product residue, coprime to n")->required();
  sub->add_option("--n", s.n, "modulus n >= 2")->required();
}

void write_points(std::ostream& out, const std::vector<std::vector<u64>>& points, unsigned d, Format format) {
  if (format == Format::json) {
    out << nlohmann::json(points).dump() << '\n';
    return;
  }
  const char sep = format == Format::csv ? ',' : ' ';
  for (unsigned i = 0; i < d; ++i) out << (i ? std::string(1, sep) : "") << 'x' << i + 1;
  out << '\n';
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? std::string(1, sep) : "") << p[i];
    out << '\n';
  }
}

void write_residues(std::ostream& out, const ResidueSet& set, Format format) {
  const auto members = set.members();
  if (format == Format::json) {
    out << nlohmann::json(members).dump() << '\n';
    return;
  }
  out << "residue\n";
  for (u64 r : members) out << r << '\n';
}

void write_mismatches(std::ostream& out, const VerifySummary& s, Format format) {
  if (format == Format::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& m : s.mismatches)
      arr.push_back({{"n", m.n},
                     {"a", m.a},
                     {"kind", to_string(m.kind)},
                     {"closed_form", m.closed_form},
                     {"oracle", m.oracle}});
    out << arr.dump(2) << '\n';
    return;
  }
  out << "n,a,kind,closed_form,oracle\n";
  for (const auto& m : s.mismatches)
    out << m.n << ',' << m.a << ',' << to_string(m.kind) << ',' << m.closed_form << ',' << m.oracle << '\n';
}

int run_checked(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const PartialResult& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& pp : e.missing()) err << "  unresolved factor " << pp.p << '^' << pp.e << '\n';
    return kComputation;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kComputation;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kComputation;
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kComputation;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coordinate sumsets and difference sets of modular hyperbolas", "modhyp"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--threads", g.threads, "worker threads (default: MODHYP_THREADS or hardware count)")
      ->check(CLI::Range(1U, 4096U));
  app.add_option("--budget", g.budget, "max tuples an exhaustive enumeration may visit")
      ->check(CLI::Range(u64{1}, std::numeric_limits<u64>::max()));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));

  std::function<int()> action;

  SpecArgs spec;
  bool sumset = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the points of H_d(a;n) or its signed sumset");
  add_spec(enumerate, spec, true, true);
  enumerate->add_flag("--sumset", sumset, "emit the reduced signed sumset instead of points");
  enumerate->callback([&] {
    action = [&] {
      const auto s = HyperbolaSpec::make(spec.d, spec.m, spec.a, spec.n);
      if (sumset) {
        const auto set = signed_sumset(s, g.enumeration());
        write_residues(out, set, g.fmt());
        err << "|S| = " << set.size() << " of " << s.n << '\n';
      } else {
        const auto points = enumerate_points(s, g.budget);
        write_points(out, points, s.d, g.fmt());
        err << points.size() << " points\n";
      }
      return int{kOk};
    };
  });

  auto* card = app.add_subcommand("card", "cardinality of the signed sumset with per-factor methods");
  add_spec(card, spec, true, false);
  card->callback([&] {
    action = [&] {
      const auto s = HyperbolaSpec::make(spec.d, spec.m, spec.a, spec.n);
      write_reports(out, card_signed_sumset(s, g.enumeration()), g.fmt());
      return int{kOk};
    };
  });

  i64 a = 1;
  u64 n = 2;
  auto* ratio = app.add_subcommand("ratio", "c2(a;n) with its classification");
  ratio->add_option("--a", a)->required();
  ratio->add_option("--n", n)->required();
  ratio->callback([&] {
    action = [&] {
      write_reports(out, a, n, ratio_c2(a, n), g.fmt());
      return int{kOk};
    };
  });

  u64 max_pp = 0;
  u64 max_n = 0;
  auto* verify = app.add_subcommand("verify", "closed forms against exhaustive enumeration");
  verify->add_option("--max-pp", max_pp, "check every prime power up to this bound")->required();
  verify->add_option("--max-n", max_n, "also check CRT composition for every n up to this bound");
  verify->callback([&] {
    action = [&] {
      auto summary = verify_prime_powers(max_pp, g.threads);
      err << "prime powers <= " << max_pp << ": " << summary.moduli << " moduli, " << summary.cases << " cases, "
          << summary.mismatches.size() << " mismatches\n";
      if (max_n >= 2) {
        auto comp = verify_composites(max_n, 300, 20, 0x5eed, g.threads);
        err << "composites <= " << max_n << ": " << comp.moduli << " moduli, " << comp.cases << " cases, "
            << comp.mismatches.size() << " mismatches\n";
        summary.moduli += comp.moduli;
        summary.cases += comp.cases;
        summary.mismatches.insert(summary.mismatches.end(), comp.mismatches.begin(), comp.mismatches.end());
      }
      if (!summary.mismatches.empty()) {
        write_mismatches(out, summary, g.fmt());
        return int{kComputation};
      }
      return int{kOk};
    };
  });

  std::string threshold = "1";
  auto* scan = app.add_subcommand("scan", "dominance reports for every n up to --max-n, ascending");
  scan->add_option("--a", a)->required();
  scan->add_option("--max-n", max_n)->required();
  scan->add_option("--L", threshold, "threshold counted in the summary, as num/den");
  scan->callback([&] {
    action = [&] {
      DominanceWriter writer(out, g.fmt());
      const auto summary = dominance_scan(
          a, max_n, Rational::parse(threshold), [&](const DominanceReport& r) { writer.write(r); }, g.threads);
      writer.finish();
      err << summary.reported << " moduli reported, " << summary.skipped << " skipped (not coprime to a), "
          << summary.above_threshold << " with c2 > " << threshold << '\n';
      return int{kOk};
    };
  });

  auto* density = app.add_subcommand("density", "share of n in E_a with c2 > L");
  density->add_option("--a", a)->required();
  density->add_option("--max-n", max_n)->required();
  density->add_option("--L", threshold, "threshold, as num/den");
  density->callback([&] {
    action = [&] {
      write_reports(out, density_report(a, max_n, Rational::parse(threshold), g.threads), g.fmt());
      return int{kOk};
    };
  });

  unsigned k_max = 0;
  unsigned t = 2;
  auto* primorial = app.add_subcommand("primorial", "c2 along products of the first k primes = 3 mod 4");
  primorial->add_option("--a", a)->required();
  primorial->add_option("--k-max", k_max)->required();
  primorial->add_option("--t", t, "exponent of the powered primorial");
  primorial->callback([&] {
    action = [&] {
      write_reports(out, primorial_series(a, k_max, t), g.fmt());
      return int{kOk};
    };
  });

  auto* coverage = app.add_subcommand("coverage", "residues missed by the signed sumset, d >= 3");
  add_spec(coverage, spec, true, true);
  coverage->callback([&] {
    action = [&] {
      const auto s = HyperbolaSpec::make(spec.d, spec.m, spec.a, spec.n);
      write_reports(out, coverage_check(s, g.enumeration()), g.fmt());
      return int{kOk};
    };
  });

  i64 b = 0;
  u64 p = 0;
  auto* solve3 = app.add_subcommand("solve3", "units x1, x2, x3 mod p^t with given sum b and product a");
  solve3->add_option("--b", b)->required();
  solve3->add_option("--a", a)->required();
  solve3->add_option("--p", p)->required();
  solve3->add_option("--t", t)->required();
  solve3->callback([&] {
    action = [&] {
      write_reports(out, solve_sum_product(b, a, p, t), b, a, g.fmt());
      return int{kOk};
    };
  });

  std::string out_path;
  auto* plot = app.add_subcommand("plot", "SVG scatter of H_2(a;n)");
  add_spec(plot, spec, false, false);
  plot->add_option("--out", out_path, "output file; '-' writes to stdout")->required();
  plot->callback([&] {
    action = [&] {
      const auto s = HyperbolaSpec::make(2, 2, spec.a, spec.n);
      std::vector<std::pair<u64, u64>> points;
      for_each_point(
          s, UnitTable(s.n), [&](std::span<const u64> pt) { points.emplace_back(pt[0], pt[1]); }, g.budget);
      const auto svg = render_svg(points, s.n);
      if (out_path == "-") {
        out << svg;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file || !(file << svg)) throw InvalidArgument("cannot write " + out_path);
      }
      err << points.size() << " points\n";
      return int{kOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  }
  try {
    (void)g.fmt();
  } catch (const InvalidArgument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return action ? run_checked(action, err) : int{kUsage};
}

}  // namespace modhyp::cli
