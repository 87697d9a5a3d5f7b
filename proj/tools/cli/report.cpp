#include "cli/report.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "modhyp/errors.hpp"

namespace modhyp::cli {

namespace {

using json = nlohmann::ordered_json;

double decimal_value(const Rational& r) { return std::stod(to_decimal(r)); }

json rational_json(const Rational& r) { return r.to_string(); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto l : split(text, '\n')) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("csv: bad number '" + std::string(s) + "'");
  return v;
}

void expect_header(const std::vector<std::string_view>& ls, std::string_view header) {
  if (ls.empty() || ls.front() != header) throw InvalidArgument("csv: expected header '" + std::string(header) + "'");
}

std::string method_list(const CardinalityReport& r) {
  std::string out;
  for (const auto& f : r.per_factor) {
    if (!out.empty()) out += ", ";
    out += std::to_string(f.p) + "^" + std::to_string(f.t) + " -> " + std::to_string(f.count) + " (" +
           std::string(to_string(f.method)) + ")";
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw InvalidArgument("unknown format '" + std::string(text) + "'");
}

Dominance parse_dominance(std::string_view text) {
  for (auto d : {Dominance::sum_dominant, Dominance::difference_dominant, Dominance::balanced})
    if (to_string(d) == text) return d;
  throw InvalidArgument("unknown classification '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  for (auto m : {Method::closed_form_p2, Method::closed_form_odd_p, Method::small_power_table, Method::full_coverage,
                 Method::oracle})
    if (to_string(m) == text) return m;
  throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

// --- dominance ---------------------------------------------------------------

DominanceWriter::DominanceWriter(std::ostream& out, Format format) : out_(out), format_(format) {
  if (format_ == Format::csv) out_ << kDominanceHeader << '\n';
  if (format_ == Format::table)
    out_ << std::left << std::setw(10) << "a" << std::setw(12) << "n" << std::setw(24) << "c2" << std::setw(12)
         << "decimal" << "classification\n";
  if (format_ == Format::json) out_ << '[';
}

DominanceWriter::~DominanceWriter() { finish(); }

void DominanceWriter::write(const DominanceReport& r) {
  switch (format_) {
    case Format::csv:
      out_ << r.a << ',' << r.n << ',' << r.c2.to_string() << ',' << to_decimal(r.c2) << ','
           << to_string(r.classification) << '\n';
      break;
    case Format::table:
      out_ << std::left << std::setw(10) << r.a << std::setw(12) << r.n << std::setw(24) << r.c2.to_string()
           << std::setw(12) << to_decimal(r.c2) << to_string(r.classification) << '\n';
      break;
    case Format::json: {
      json factors = json::array();
      for (const auto& f : r.factor_breakdown)
        factors.push_back({{"p", f.p}, {"t", f.t}, {"ratio", rational_json(f.ratio)}});
      json obj = {{"a", r.a},
                  {"n", r.n},
                  {"c2", rational_json(r.c2)},
                  {"c2_decimal", decimal_value(r.c2)},
                  {"classification", to_string(r.classification)},
                  {"factors", factors}};
      out_ << (first_ ? "\n  " : ",\n  ") << obj.dump();
      break;
    }
  }
  first_ = false;
}

void DominanceWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::json) out_ << (first_ ? "]\n" : "\n]\n");
}

void write_reports(std::ostream& out, std::span<const DominanceReport> reports, Format format) {
  DominanceWriter w(out, format);
  for (const auto& r : reports) w.write(r);
}

std::vector<DominanceRow> parse_dominance_csv(std::string_view text) {
  const auto ls = lines(text);
  expect_header(ls, kDominanceHeader);
  std::vector<DominanceRow> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i], ',');
    if (f.size() != 5) throw InvalidArgument("csv: dominance row needs 5 fields");
    out.push_back({parse_number<i64>(f[0]), parse_number<u64>(f[1]), Rational::parse(f[2]), std::string(f[3]),
                   parse_dominance(f[4])});
  }
  return out;
}

// --- cardinality ---------------------------------------------------------------

void write_reports(std::ostream& out, const CardinalityReport& r, Format format) {
  const auto& s = r.spec;
  switch (format) {
    case Format::csv:
      out << kCardHeader << '\n';
      for (const auto& f : r.per_factor)
        out << s.a << ',' << s.n << ',' << s.d << ',' << s.m << ',' << f.p << ',' << f.t << ',' << f.count << ','
            << to_string(f.method) << ',' << r.total << '\n';
      break;
    case Format::table:
      out << "#S_" << s.d << "(m=" << s.m << "; a=" << s.a << "; n=" << s.n << ") = " << r.total << '\n';
      for (const auto& f : r.per_factor)
        out << "  " << f.p << '^' << f.t << ": " << f.count << "  [" << to_string(f.method) << "]\n";
      break;
    case Format::json: {
      json factors = json::array();
      for (const auto& f : r.per_factor)
        factors.push_back({{"p", f.p}, {"t", f.t}, {"count", f.count}, {"method", to_string(f.method)}});
      json obj = {{"a", s.a}, {"n", s.n}, {"d", s.d}, {"m", s.m}, {"total", r.total}, {"factors", factors}};
      out << obj.dump(2) << '\n';
      break;
    }
  }
}

std::vector<CardRow> parse_card_csv(std::string_view text) {
  const auto ls = lines(text);
  expect_header(ls, kCardHeader);
  std::vector<CardRow> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i], ',');
    if (f.size() != 9) throw InvalidArgument("csv: card row needs 9 fields");
    out.push_back({parse_number<u64>(f[0]), parse_number<u64>(f[1]), parse_number<unsigned>(f[2]),
                   parse_number<unsigned>(f[3]), parse_number<u64>(f[4]), parse_number<unsigned>(f[5]),
                   parse_number<u64>(f[6]), parse_method(f[7]), parse_number<u64>(f[8])});
  }
  return out;
}

// --- ratio -----------------------------------------------------------------------

void write_reports(std::ostream& out, i64 a, u64 n, const RatioValue& r, Format format) {
  const auto cls = classify(r.value);
  switch (format) {
    case Format::csv:
      out << "a,n,sum_count,diff_count,c2,c2_decimal,classification\n"
          << a << ',' << n << ',' << r.numerator << ',' << r.denominator << ',' << r.value.to_string() << ','
          << to_decimal(r.value) << ',' << to_string(cls) << '\n';
      break;
    case Format::table:
      out << "a = " << a << ", n = " << n << '\n'
          << "#S_2 = " << r.numerator << ", #D_2 = " << r.denominator << '\n'
          << "c2 = " << r.value.to_string() << " (" << to_decimal(r.value) << ")\n"
          << "classification = " << to_string(cls) << '\n';
      break;
    case Format::json: {
      json obj = {{"a", a},
                  {"n", n},
                  {"sum_count", r.numerator},
                  {"diff_count", r.denominator},
                  {"c2", rational_json(r.value)},
                  {"c2_decimal", decimal_value(r.value)},
                  {"classification", to_string(cls)}};
      out << obj.dump(2) << '\n';
      break;
    }
  }
}

// --- density ---------------------------------------------------------------------

void write_reports(std::ostream& out, const DensityReport& r, Format format) {
  auto fixed = [](long double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << static_cast<double>(v);
    return s.str();
  };
  switch (format) {
    case Format::csv:
      out << "a,x,L,e_a_count,c_a_count,density,density_decimal,k_a,truncation_prime,truncated_bound,rigorous_bound\n"
          << r.a << ',' << r.x << ',' << r.threshold.to_string() << ',' << r.e_a_count << ',' << r.c_a_count << ','
          << r.empirical_density.to_string() << ',' << to_decimal(r.empirical_density) << ',' << r.k_a.to_string()
          << ',' << r.truncation_prime << ',' << fixed(r.truncated_bound) << ',' << fixed(r.rigorous_bound) << '\n';
      break;
    case Format::table:
      out << "a = " << r.a << ", x = " << r.x << ", L = " << r.threshold.to_string() << '\n'
          << "#E_a(x) = " << r.e_a_count << ", #C_a(L,x) = " << r.c_a_count << '\n'
          << "empirical density = " << to_decimal(r.empirical_density) << '\n'
          << "K_a = " << r.k_a.to_string() << '\n'
          << "bound (product truncated at " << r.truncation_prime << ") = " << fixed(r.truncated_bound) << '\n'
          << "certified lower bound (with tail) = " << fixed(r.rigorous_bound) << '\n';
      break;
    case Format::json: {
      json obj = {{"a", r.a},
                  {"x", r.x},
                  {"L", rational_json(r.threshold)},
                  {"e_a_count", r.e_a_count},
                  {"c_a_count", r.c_a_count},
                  {"density", rational_json(r.empirical_density)},
                  {"density_decimal", decimal_value(r.empirical_density)},
                  {"k_a", rational_json(r.k_a)},
                  {"truncation_prime", r.truncation_prime},
                  {"truncated_bound", std::stod(fixed(r.truncated_bound))},
                  {"rigorous_bound", std::stod(fixed(r.rigorous_bound))}};
      out << obj.dump(2) << '\n';
      break;
    }
  }
}

// --- primorial -------------------------------------------------------------------

void write_reports(std::ostream& out, const PrimorialReport& r, Format format) {
  auto fixed = [](long double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << static_cast<double>(v);
    return s.str();
  };
  switch (format) {
    case Format::csv:
      out << "a,t,k,N_k,c2_Nk,c2_Nk_decimal,c2_Nk_t,c2_Nk_t_decimal,loglog_Nk\n";
      for (const auto& row : r.rows)
        out << r.a << ',' << r.t << ',' << row.k << ',' << row.primorial << ',' << row.c2.to_string() << ','
            << to_decimal(row.c2) << ',' << row.c2_pow.to_string() << ',' << to_decimal(row.c2_pow) << ','
            << fixed(row.log_log) << '\n';
      break;
    case Format::table:
      out << "a = " << r.a << ", t = " << r.t << " (qualitative growth check)\n";
      out << std::left << std::setw(4) << "k" << std::setw(22) << "N_k" << std::setw(14) << "c2(N_k)" << std::setw(14)
          << "c2(N_k^t)" << "loglog N_k\n";
      for (const auto& row : r.rows)
        out << std::left << std::setw(4) << row.k << std::setw(22) << row.primorial << std::setw(14)
            << to_decimal(row.c2) << std::setw(14) << to_decimal(row.c2_pow) << fixed(row.log_log) << '\n';
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"k", row.k},
                        {"N_k", row.primorial},
                        {"c2_Nk", rational_json(row.c2)},
                        {"c2_Nk_t", rational_json(row.c2_pow)},
                        {"loglog_Nk", std::stod(fixed(row.log_log))}});
      out << json{{"a", r.a}, {"t", r.t}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
  }
}

// --- coverage --------------------------------------------------------------------

void write_reports(std::ostream& out, const CoverageReport& r, Format format) {
  const auto missing = r.missing.members();
  const auto& s = r.spec;
  switch (format) {
    case Format::csv: {
      out << "d,m,a,n,covered,theorem_applies,missing_count,missing\n"
          << s.d << ',' << s.m << ',' << s.a << ',' << s.n << ',' << (r.covered ? "true" : "false") << ','
          << (r.theorem_applies ? "true" : "false") << ',' << missing.size() << ',';
      for (std::size_t i = 0; i < missing.size(); ++i) out << (i ? " " : "") << missing[i];
      out << '\n';
      break;
    }
    case Format::table:
      out << "S_" << s.d << "(m=" << s.m << "; a=" << s.a << "; n=" << s.n << "): "
          << (r.covered ? "covers every residue" : "incomplete") << '\n'
          << "all prime factors > 7: " << (r.theorem_applies ? "yes" : "no") << '\n'
          << "missing (" << missing.size() << "):";
      for (u64 v : missing) out << ' ' << v;
      out << '\n';
      break;
    case Format::json:
      out << json{{"d", s.d},
                  {"m", s.m},
                  {"a", s.a},
                  {"n", s.n},
                  {"covered", r.covered},
                  {"theorem_applies", r.theorem_applies},
                  {"missing", missing}}
                 .dump(2)
          << '\n';
      break;
  }
}

// --- solver ----------------------------------------------------------------------

void write_reports(std::ostream& out, const SumProductTriple& t, i64 b, i64 a, Format format) {
  switch (format) {
    case Format::csv:
      out << "b,a,modulus,x1,x2,x3\n" << b << ',' << a << ',' << t.modulus << ',' << t.x1 << ',' << t.x2 << ','
          << t.x3 << '\n';
      break;
    case Format::table:
      out << "(x1, x2, x3) = (" << t.x1 << ", " << t.x2 << ", " << t.x3 << ") mod " << t.modulus << '\n'
          << "x1 + x2 + x3 = " << b << ", x1 x2 x3 = " << a << " (verified)\n";
      break;
    case Format::json:
      out << json{{"b", b}, {"a", a}, {"modulus", t.modulus}, {"x1", t.x1}, {"x2", t.x2}, {"x3", t.x3}}.dump(2)
          << '\n';
      break;
  }
}

}  // namespace modhyp::cli
