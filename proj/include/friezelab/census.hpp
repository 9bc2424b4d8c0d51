#pragma once

#include <string>
#include <vector>

#include "friezelab/config.hpp"
#include "friezelab/linalg.hpp"

namespace friezelab::census {

using linalg::cpp_int;

/// How a count is produced. The four non-automatic methods are independent
/// and must agree wherever more than one applies; automatic picks the closed
/// form and refuses parameters that have none.
enum class Method {
    automatic,
    closed_form,  // residue-cased polynomial in q
    recursion,    // coupled one-step systems over the families
    search,       // configuration-space traversal plus the orbit count
    enumerate,    // direct quiddity enumeration
};

[[nodiscard]] Method parse_method(const std::string& name);
[[nodiscard]] std::string method_name(Method m);

/// Closed-form size of a named point-configuration family (the names of
/// family_spec, except base, base* and c4* which have no closed form).
/// Residue requirements mirror family_spec.
[[nodiscard]] cpp_int family_closed_form(const std::string& name, long n, long q);

/// Same values through the coupled recursions.
[[nodiscard]] cpp_int family_recursion(const std::string& name, long n, long q);

/// Family size by any method. search accepts every family name; k is only
/// needed there, and only for base and base*.
[[nodiscard]] cpp_int family_count(const std::string& name, long n, long q,
                                   Method method = Method::automatic,
                                   const config::DfsOptions& opts = {},
                                   int k = 0);

/// Number of tame patterns of order k and period n over GF(q).
/// closed_form and recursion cover k = 2 (odd n), k = 3, and k = 4 (odd n);
/// search and enumerate cover everything at exponential cost.
[[nodiscard]] cpp_int frieze_count(int k, long n, long q,
                                   Method method = Method::automatic,
                                   const config::DfsOptions& opts = {});

/// The conjectured product count for coprime k and n:
///   (q^n - q)(q^n - q^2)...(q^n - q^{k-1}) / |PGL(k, q)|.
/// Proven for the orders the closed forms cover; open beyond.
[[nodiscard]] cpp_int conjectured_count(int k, long n, long q);

struct Table {
    int k = 0;
    std::vector<long> widths;
    std::vector<long> qs;
    std::vector<std::vector<cpp_int>> values;    // [width index][q index]
    std::vector<std::vector<cpp_int>> expected;  // frozen reference grid

    [[nodiscard]] bool matches() const { return values == expected; }
};

/// The two reference count grids: 1 is order 3, widths 1..5;
/// 2 is order 4, widths 2 and 4. Columns are q = 2, 3, 4, 5, 7.
/// values is recomputed through frieze_count; expected is frozen data.
[[nodiscard]] Table reproduce_table(int which);

}  // namespace friezelab::census
