#pragma once

#include <functional>
#include <string>
#include <vector>

#include "friezelab/gf.hpp"
#include "friezelab/linalg.hpp"

namespace friezelab::frieze {

using gf::Fe;
using linalg::Matrix;
using linalg::Vec;

/// (-1)^e as a field element.
[[nodiscard]] Fe alt_sign(const gf::Field& f, long e);

/// The inner rows of a frieze pattern of width k - 1 and period n: entries
/// a(s, i) with s in [1, k-1] and i cyclic 1-based modulo n. Row k-1 sits
/// directly under the top ones row.
class Quiddity {
public:
    Quiddity(const gf::Field& f, int k, long n);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] long n() const { return n_; }
    [[nodiscard]] const gf::Field& field() const { return *f_; }

    [[nodiscard]] Fe at(int s, long i) const { return a_[idx(s, i)]; }
    void set(int s, long i, Fe v) { a_[idx(s, i)] = v; }

    friend bool operator==(const Quiddity& a, const Quiddity& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.f_ == b.f_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Quiddity& a, const Quiddity& b) { return !(a == b); }
    /// Lexicographic on (k, n, entry codes); for ordered containers.
    friend bool operator<(const Quiddity& a, const Quiddity& b);

private:
    [[nodiscard]] std::size_t idx(int s, long i) const;

    const gf::Field* f_;
    int k_;
    long n_;
    std::vector<Fe> a_;  // row s-1, column (i-1) mod n
};

/// The k x k matrix M(i) with first row
///   (a(k-1,i), -a(k-2,i+1), ..., (-1)^{k-2} a(1,i+k-2), (-1)^{k-1})
/// and ones on the subdiagonal. Multiplying these left to right advances the
/// frieze recursion one column at a time.
[[nodiscard]] Matrix companion_matrix(const Quiddity& q, long i);

/// True when M(1) M(2) ... M(n) = (-1)^{k-1} Id, which holds exactly for the
/// quiddities of closed patterns.
[[nodiscard]] bool check_quiddity(const Quiddity& q);

/// A width-(n-k-1) pattern with its border: rows j in [-(k-1), n-1], columns
/// i cyclic 1-based modulo n. Rows j in [-(k-1), -1] are zero, row 0 is ones;
/// a valid pattern also has row w+1 ones and rows [w+2, n-1] zero.
class Frieze {
public:
    Frieze(const gf::Field& f, int k, long n);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] long n() const { return n_; }
    [[nodiscard]] long w() const { return n_ - k_ - 1; }
    [[nodiscard]] const gf::Field& field() const { return *f_; }
    [[nodiscard]] int j_min() const { return -(k_ - 1); }
    [[nodiscard]] long j_max() const { return n_ - 1; }

    [[nodiscard]] Fe at(long j, long i) const { return e_[idx(j, i)]; }
    void set(long j, long i, Fe v) { e_[idx(j, i)] = v; }

    friend bool operator==(const Frieze& a, const Frieze& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.f_ == b.f_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Frieze& a, const Frieze& b) { return !(a == b); }

private:
    [[nodiscard]] std::size_t idx(long j, long i) const;

    const gf::Field* f_;
    int k_;
    long n_;
    std::vector<Fe> e_;  // row j + k - 1, column (i-1) mod n
};

/// Runs the pattern recursion downward from the quiddity without checking
/// that the array closes.
[[nodiscard]] Frieze build_frieze_unchecked(const Quiddity& q);

/// Builds the pattern and throws precondition_violation unless the bottom
/// border comes out as ones and zeros.
[[nodiscard]] Frieze build_frieze(const Quiddity& q);

struct FriezeReport {
    bool valid = true;
    std::vector<std::string> failures;  // at most 20 are recorded
    std::size_t unit_diamonds = 0;      // k x k minors checked (det 1)
    std::size_t null_diamonds = 0;      // (k+1) x (k+1) minors checked (det 0)
};

/// Full re-validation of an arbitrary filled array: border rows, every k x k
/// diamond determinant equal to 1, every (k+1) x (k+1) diamond determinant
/// equal to 0. Trusts nothing about how the array was produced.
[[nodiscard]] FriezeReport validate_frieze(const Frieze& fr);

/// The k x k diamond minor rooted at row j, column i: entry (r, c) is the
/// array value at (j + c - r, i + r). Defined for j in [0, w+1].
[[nodiscard]] Matrix unit_diamond(const Frieze& fr, long j, long i);

/// The (k+1) x (k+1) diamond minor, defined for j in [1, w].
[[nodiscard]] Matrix null_diamond(const Frieze& fr, long j, long i);

/// Reads the quiddity back off a pattern by downward induction on the rows
/// just below the top ones row.
[[nodiscard]] Quiddity extract_quiddity(const Frieze& fr);

/// The n fundamental column vectors of a pattern. Their cyclically
/// consecutive k-windows all have the same determinant, and their coefficient
/// relations reproduce the quiddity.
[[nodiscard]] std::vector<Vec> frieze_vectors(const Frieze& fr);

struct EnumerateOptions {
    int workers = 1;
    unsigned long long node_cap = 0;  // 0 = unlimited; counts matrix placements
};

/// Visits every valid quiddity for the given parameters exactly once, in
/// lexicographic order of the free entries. Chooses the first rows of
/// M(1)..M(n-1) freely, forces M(n) from the product criterion and keeps the
/// leaf only if the forced matrix has the right shape. Deterministic order
/// for any worker count. Throws resource_limit when node_cap is exceeded.
void enumerate_quiddities(const gf::Field& f, int k, long n,
                          const std::function<void(const Quiddity&)>& fn,
                          const EnumerateOptions& opts = {});

}  // namespace friezelab::frieze
