#pragma once

// Table / CSV / JSON emission for every report type the CLI produces.
// Rationals are written exactly as "num/den" next to a 6-digit decimal.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modhyp/analysis.hpp"
#include "modhyp/cardinality.hpp"

namespace modhyp::cli {

enum class Format { table, csv, json };

Format parse_format(std::string_view text);

inline constexpr std::string_view kDominanceHeader = "a,n,c2,c2_decimal,classification";
inline constexpr std::string_view kCardHeader = "a,n,d,m,p,t,count,method,total";

/// Streams dominance reports one at a time; rows appear in the order given.
class DominanceWriter {
 public:
  DominanceWriter(std::ostream& out, Format format);
  ~DominanceWriter();
  DominanceWriter(const DominanceWriter&) = delete;
  DominanceWriter& operator=(const DominanceWriter&) = delete;

  void write(const DominanceReport& r);
  /// Closes the JSON array; idempotent and also run by the destructor.
  void finish();

 private:
  std::ostream& out_;
  Format format_;
  bool first_ = true;
  bool finished_ = false;
};

void write_reports(std::ostream& out, std::span<const DominanceReport> reports, Format format);
void write_reports(std::ostream& out, const CardinalityReport& report, Format format);
void write_reports(std::ostream& out, i64 a, u64 n, const RatioValue& ratio, Format format);
void write_reports(std::ostream& out, const DensityReport& report, Format format);
void write_reports(std::ostream& out, const PrimorialReport& report, Format format);
void write_reports(std::ostream& out, const CoverageReport& report, Format format);
void write_reports(std::ostream& out, const SumProductTriple& triple, i64 b, i64 a, Format format);

/// The subset of a DominanceReport carried by one CSV row.
struct DominanceRow {
  i64 a = 0;
  u64 n = 0;
  Rational c2{1};
  std::string c2_decimal;
  Dominance classification = Dominance::balanced;

  friend bool operator==(const DominanceRow&, const DominanceRow&) = default;
};

struct CardRow {
  u64 a = 0, n = 0;
  unsigned d = 2, m = 2;
  u64 p = 0;
  unsigned t = 0;
  u64 count = 0;
  Method method = Method::oracle;
  u64 total = 0;

  friend bool operator==(const CardRow&, const CardRow&) = default;
};

/// Parses CSV produced by the writers above (header line required).
std::vector<DominanceRow> parse_dominance_csv(std::string_view text);
std::vector<CardRow> parse_card_csv(std::string_view text);

Dominance parse_dominance(std::string_view text);
Method parse_method(std::string_view text);

}  // namespace modhyp::cli
