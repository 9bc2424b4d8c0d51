#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "friezelab/frieze.hpp"
#include "friezelab/gf.hpp"
#include "friezelab/linalg.hpp"

namespace friezelab::config {

using gf::Fe;
using linalg::cpp_int;
using linalg::Matrix;
using linalg::Vec;

/// A cyclic tuple of projective points, stored as canonical representatives.
using Config = std::vector<Vec>;

/// Flat table of the canonical projective points in lexicographic order,
/// with raw element codes for the search hot path.
class PointTable {
public:
    PointTable(const gf::Field& f, int k);

    [[nodiscard]] const gf::Field& field() const { return *f_; }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] std::size_t count() const { return count_; }
    /// k element codes of point id.
    [[nodiscard]] const std::uint16_t* codes(std::size_t id) const {
        return codes_.data() + id * k_;
    }
    [[nodiscard]] Vec vec(std::size_t id) const;
    /// Id of the point the vector spans. Throws invalid_parameter on zero.
    [[nodiscard]] std::size_t id_of(const Vec& v) const;

private:
    const gf::Field* f_;
    int k_;
    std::size_t count_;
    std::vector<std::uint16_t> codes_;
};

/// The listed 1-based cyclic positions must span a space of full (or, with
/// independent = false, deficient) rank.
struct TupleConstraint {
    std::vector<long> positions;
    bool independent = true;
};

/// The two positions must hold distinct points.
struct DistinctConstraint {
    long i = 0, j = 0;
};

/// Extra acceptance conditions evaluated once a full tuple is placed.
enum class LeafFilter {
    none,
    star,                   // window product equalities for i in [1, g-1]
    star_one,               // only the i = 1 equality
    wrap_product_identity,  // order 3, n = 1 mod 3 determinant identity
    w2_collinear,           // order 3, n = 2 mod 3: W2 parallel to point 1
    w1_collinear,           //                      W1 parallel to point n
    w1_w2_collinear,        //                      both
};

/// A point-tuple search problem: which k, how many points, and the
/// constraints that define membership.
struct DfsSpec {
    int k = 0;
    long n = 0;
    std::vector<TupleConstraint> tuples;
    std::vector<DistinctConstraint> distinct;
    LeafFilter leaf = LeafFilter::none;
};

struct DfsOptions {
    int workers = 1;
    unsigned long long node_cap = 0;  // 0 = unlimited; counts point placements
};

/// Number of tuples satisfying the spec. Deterministic for any worker count.
/// Throws resource_limit when node_cap is exceeded.
[[nodiscard]] cpp_int count_tuples(const gf::Field& f, const DfsSpec& spec,
                                   const DfsOptions& opts = {});

/// Streams every satisfying tuple as point ids, in lexicographic id order.
void for_each_tuple(const gf::Field& f, const DfsSpec& spec,
                    const std::function<void(const PointTable&,
                                             const std::vector<std::uint32_t>&)>& fn,
                    const DfsOptions& opts = {});

/// Named constraint systems used by the census:
///   base, base*                        (any order k)
///   c3, c3+-, c3--, c3*, c3**, c3+-*, c3--*, c3--**   (order 3)
///   c4, c4++-, c4+--, c4-+-, c4---,
///   c4*, c4+(-)[+], c4+(-)[-], c4-(-)[+], c4(--)[+]   (order 4)
/// k is inferred from the name; pass it only for base/base*.
[[nodiscard]] DfsSpec family_spec(const std::string& name, long n, int k = 0);

/// All family names accepted by family_spec, in display order.
[[nodiscard]] std::vector<std::string> family_names();

/// det(v_i, ..., v_{i+k-1}) with plain cyclic index reduction.
[[nodiscard]] Fe plain_window_det(const std::vector<Vec>& v, const gf::Field& f,
                                  long i);

/// Same, but vectors past position n continue with the factor (-1)^{k-1}.
[[nodiscard]] Fe twisted_window_det(const std::vector<Vec>& v, const gf::Field& f,
                                    long i);

/// True when all n cyclic k-point windows are independent.
[[nodiscard]] bool windows_independent(const Config& c, const gf::Field& f);

/// The g-1 equalities between the residue-class products of the twisted
/// window determinants, with g = gcd(k, n). Vacuously true when g = 1.
/// Scale-invariant, so it can be read off the representatives. For odd k
/// the twist is invisible and these are plain product equalities.
[[nodiscard]] bool star_condition(const Config& c, const gf::Field& f);

/// A choice of scalars on the points making every twisted window share one
/// determinant.
struct Lift {
    std::vector<Vec> vectors;
    std::vector<Fe> scalars;
    Fe det;
};

/// Finds a constant-determinant lift, or nullopt when none exists (exactly
/// the failure of the star condition). The determinant constant is the first
/// attainable value in canonical element order. Throws precondition_violation
/// if some window is dependent.
[[nodiscard]] std::optional<Lift> constant_det_lift(const Config& c,
                                                    const gf::Field& f);

/// Reads the coefficient array off a constant-determinant lift: each vector
/// is expanded over the next k with alternating signs, and the trailing
/// coefficient must come out as (-1)^{k-1}.
[[nodiscard]] frieze::Quiddity coefficients_of_lift(const std::vector<Vec>& w,
                                                    const gf::Field& f);

/// All coefficient arrays over every rescaling of the lift; empty when no
/// lift exists. Sorted, duplicate-free. Size is (q-1)^{g-r} with r the number
/// of parts in the maximal decomposition.
[[nodiscard]] std::vector<frieze::Quiddity> coefficient_set(const Config& c,
                                                            const gf::Field& f);

/// Partition of the residues mod g = gcd(k, n) generated by joining
/// (i+1) mod g with (i+j+1) mod g for every nonzero coefficient a(j, i).
struct Decomposition {
    int g = 0;
    int parts = 0;
    std::vector<int> part_of;  // residue -> part label in [0, parts)
};

[[nodiscard]] Decomposition maximal_decomposition(const frieze::Quiddity& q);

/// Images of the points under the matrix, re-normalized.
[[nodiscard]] Config apply_matrix(const Matrix& m, const Config& c);

}  // namespace friezelab::config
