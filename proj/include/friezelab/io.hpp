#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "friezelab/census.hpp"
#include "friezelab/config.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/gf.hpp"
#include "friezelab/linalg.hpp"

namespace friezelab::io {

/// Structured text for patterns and point tuples: a header line "k n q",
/// then one line per row with entries as packed integers (base-p digits of
/// the coefficient vector, least significant first; equal to the element
/// value itself when q is prime). Readers accept any whitespace layout but
/// reject trailing data; writers emit one canonical layout.

/// Header plus rows s = 1..k-1, each with columns i = 1..n.
void write_quiddity(std::ostream& os, const frieze::Quiddity& q);
[[nodiscard]] frieze::Quiddity read_quiddity(std::istream& is);

/// Header plus rows j = -(k-1)..n-1 including the border rows.
void write_frieze(std::ostream& os, const frieze::Frieze& fr);
[[nodiscard]] frieze::Frieze read_frieze(std::istream& is);

/// Header plus one projective representative per line, k entries each.
/// Representatives are written as given and read back unnormalized; a zero
/// line is rejected.
void write_config(std::ostream& os, const config::Config& c, const gf::Field& f);

struct LoadedConfig {
    config::Config points;
    const gf::Field* field = nullptr;
};
[[nodiscard]] LoadedConfig read_config(std::istream& is);

/// One enumerated tuple as a single line: points separated by spaces, the k
/// packed coordinates of each canonical representative joined with commas.
[[nodiscard]] std::string tuple_line(const config::PointTable& t,
                                     const std::vector<std::uint32_t>& ids);

/// Declarative search-problem format, one directive per line:
///   k <order>
///   n <points>
///   tuple <+|-> <positions...>   rank constraint on 1-based cyclic positions
///                                (+ independent, - dependent)
///   distinct <i> <j>             the two positions hold different points
///   leaf <name>                  none, star, star-one,
///                                wrap-product-identity, w2-collinear,
///                                w1-collinear, w1-w2-collinear
/// Blank lines and lines starting with # are skipped; k and n are required.
void write_spec(std::ostream& os, const config::DfsSpec& spec);
[[nodiscard]] config::DfsSpec read_spec(std::istream& is);

/// One produced count with enough metadata to reproduce the run.
struct CountReport {
    std::string op;      // frieze-count, family-count, conjectured-count,
                         // quiddity-enumeration, config-enumeration
    std::string family;  // empty unless counting a named family
    int k = 0;
    long n = 0;
    long w = -1;  // n - k - 1 where that is meaningful
    long q = 0;
    census::Method method = census::Method::automatic;
    linalg::cpp_int value;
    unsigned long long node_cap = 0;  // 0 = unlimited
};
// No worker count in the report: output bytes must not depend on it.

/// Counts travel as decimal strings in JSON and CSV; they outgrow doubles.
[[nodiscard]] std::string report_json(const CountReport& r);
[[nodiscard]] CountReport report_from_json(const std::string& text);
[[nodiscard]] std::string report_csv(const CountReport& r);
[[nodiscard]] std::string report_text(const CountReport& r);

/// Reference-grid rendering; every cell is compared against the frozen
/// expected value and mismatches are marked in all three formats.
[[nodiscard]] std::string table_text(const census::Table& t);
[[nodiscard]] std::string table_csv(const census::Table& t);
[[nodiscard]] std::string table_json(const census::Table& t);

/// Validation outcome rendering.
[[nodiscard]] std::string frieze_report_text(const frieze::FriezeReport& r);
[[nodiscard]] std::string frieze_report_json(const frieze::FriezeReport& r);

}  // namespace friezelab::io
