#include "friezelab/config.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

namespace friezelab::config {

using frieze::alt_sign;

namespace {

constexpr std::size_t kMaxPoints = std::size_t(1) << 22;

// 1-based cyclic index to 0-based storage slot
long wrap0(long i, long n) {
    long r = (i - 1) % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace

PointTable::PointTable(const gf::Field& f, int k) : f_(&f), k_(k) {
    if (k < 1) throw invalid_parameter("point table needs k >= 1");
    cpp_int total = 0, qi = 1;
    for (int i = 0; i < k; ++i) {
        total += qi;
        qi *= f.q();
    }
    if (total > kMaxPoints)
        throw unsupported_parameters("projective point table would exceed " +
                                     std::to_string(kMaxPoints) + " entries");
    const auto pts = linalg::all_proj_points(f, k);
    count_ = pts.size();
    codes_.reserve(count_ * static_cast<std::size_t>(k));
    for (const Vec& v : pts)
        for (Fe e : v) codes_.push_back(e.code());
}

Vec PointTable::vec(std::size_t id) const {
    if (id >= count_) throw invalid_parameter("point id out of range");
    Vec v;
    v.reserve(static_cast<std::size_t>(k_));
    const std::uint16_t* c = codes(id);
    for (int t = 0; t < k_; ++t) v.push_back(f_->elem(c[t]));
    return v;
}

std::size_t PointTable::id_of(const Vec& v) const {
    const Vec rep = linalg::proj_normalize(v);
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const std::uint16_t* c = codes(mid);
        int cmp = 0;
        for (int t = 0; t < k_; ++t) {
            if (c[t] != rep[static_cast<std::size_t>(t)].code()) {
                cmp = c[t] < rep[static_cast<std::size_t>(t)].code() ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else if (cmp > 0)
            hi = mid;
        else
            return mid;
    }
    throw invariant_violation("normalized point missing from the table");
}

Fe plain_window_det(const std::vector<Vec>& v, const gf::Field& f, long i) {
    const long n = static_cast<long>(v.size());
    const int k = static_cast<int>(v.front().size());
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        cols.push_back(v[static_cast<std::size_t>(wrap0(i + t, n))]);
    return Matrix::from_columns(f, cols).det();
}

Fe twisted_window_det(const std::vector<Vec>& v, const gf::Field& f, long i) {
    const long n = static_cast<long>(v.size());
    const int k = static_cast<int>(v.front().size());
    if (i < 1 || i > n)
        throw invalid_parameter("twisted window start outside [1, n]");
    const Fe s = alt_sign(f, k - 1);
    std::vector<Vec> cols;
    for (long j = i; j < i + k; ++j) {
        Vec c = v[static_cast<std::size_t>(wrap0(j, n))];
        if (j > n)
            for (Fe& x : c) x *= s;
        cols.push_back(std::move(c));
    }
    return Matrix::from_columns(f, cols).det();
}

bool windows_independent(const Config& c, const gf::Field& f) {
    for (long i = 1; i <= static_cast<long>(c.size()); ++i)
        if (plain_window_det(c, f, i).is_zero()) return false;
    return true;
}

bool star_condition(const Config& c, const gf::Field& f) {
    const long n = static_cast<long>(c.size());
    const int k = static_cast<int>(c.front().size());
    const long g = std::gcd<long>(k, n);
    // twisted determinants, so the wrap windows carry their continuation
    // signs; for odd k this is the plain product condition
    for (long i = 1; i <= g - 1; ++i) {
        Fe lhs = f.one(), rhs = f.one();
        for (long s = 0; s < n / g; ++s) {
            lhs *= twisted_window_det(c, f, i + g * s);
            rhs *= twisted_window_det(c, f, i + 1 + g * s);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::optional<Lift> constant_det_lift(const Config& c, const gf::Field& f) {
    const long n = static_cast<long>(c.size());
    const int k = static_cast<int>(c.front().size());
    std::vector<Fe> D(static_cast<std::size_t>(n), f.zero());
    for (long i = 1; i <= n; ++i) {
        D[static_cast<std::size_t>(i - 1)] = twisted_window_det(c, f, i);
        if (D[static_cast<std::size_t>(i - 1)].is_zero())
            throw precondition_violation("window " + std::to_string(i) +
                                         " is dependent; no lift can exist");
    }
    const long g = std::gcd<long>(k, n);
    const long t = k / g;
    // smallest b > 0 with b*k = g modulo n
    long b = 0;
    for (long cand = 1; cand <= n; ++cand)
        if ((cand * k) % n == g % n) {
            b = cand;
            break;
        }
    if (b == 0) throw invariant_violation("no step count reaches the window gap");
    auto Dat = [&](long i) { return D[static_cast<std::size_t>(wrap0(i, n))]; };
    // step(i): factor relating the scalar at i to the one at i - g
    auto step = [&](long i) {
        Fe r = f.one();
        for (long m = 1; m <= b; ++m) r *= Dat(i - m * k) / Dat(i - m * k + 1);
        return r;
    };
    // prefix(r, s) relates position r + s*g to position r
    auto prefix = [&](long r, long s) {
        Fe p = f.one();
        for (long u = 1; u <= s; ++u) p *= step(r + u * g);
        return p;
    };
    Fe known = f.one();  // scalar product over window 1 before the root choice
    for (long r = 1; r <= g; ++r)
        for (long s = 1; s <= t - 1; ++s) known *= prefix(r, s);
    // search the determinant constant in canonical order for a solvable root
    Fe root = f.zero();
    Fe constant = f.zero();
    for (long code = 1; code < f.q(); ++code) {
        const Fe cand = f.elem(code);
        const auto rt = gf::nth_root(cand / (D[0] * known), t);
        if (rt) {
            root = *rt;
            constant = cand;
            break;
        }
    }
    if (constant.is_zero())
        throw invariant_violation("no attainable window determinant constant");
    std::vector<Fe> lambda(static_cast<std::size_t>(n), f.one());
    for (long r = 1; r <= g; ++r) {
        const Fe base = (r == g) ? root : f.one();
        for (long s = 0; r + s * g <= n; ++s)
            lambda[static_cast<std::size_t>(r + s * g - 1)] = prefix(r, s) * base;
    }
    Lift lift;
    lift.scalars = lambda;
    lift.det = constant;
    lift.vectors.reserve(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i) {
        Vec w = c[static_cast<std::size_t>(i - 1)];
        for (Fe& x : w) x *= lambda[static_cast<std::size_t>(i - 1)];
        lift.vectors.push_back(std::move(w));
    }
    // the construction closes up exactly when the star condition holds
    for (long i = 1; i <= n; ++i)
        if (twisted_window_det(lift.vectors, f, i) != constant) return std::nullopt;
    return lift;
}

frieze::Quiddity coefficients_of_lift(const std::vector<Vec>& w, const gf::Field& f) {
    const long n = static_cast<long>(w.size());
    const int k = static_cast<int>(w.front().size());
    const Fe sign = alt_sign(f, k - 1);
    frieze::Quiddity q(f, k, n);
    auto vec_at = [&](long j) {
        Vec v = w[static_cast<std::size_t>(wrap0(j, n))];
        if (j > n)
            for (Fe& x : v) x *= sign;
        return v;
    };
    for (long i = 1; i <= n; ++i) {
        std::vector<Vec> cols;
        for (int l = 1; l <= k; ++l) cols.push_back(vec_at(i + l));
        const Matrix m = Matrix::from_columns(f, cols);
        if (m.det().is_zero())
            throw precondition_violation("window " + std::to_string(i + 1) +
                                         " is dependent; no coefficients exist");
        const Vec x = linalg::solve(m, w[static_cast<std::size_t>(i - 1)]);
        if (x[static_cast<std::size_t>(k - 1)] != sign)
            throw precondition_violation(
                "window determinants are not constant at position " +
                std::to_string(i));
        for (int l = 1; l <= k - 1; ++l)
            q.set(k - l, i + l - 1,
                  alt_sign(f, l - 1) * x[static_cast<std::size_t>(l - 1)]);
    }
    return q;
}

std::vector<frieze::Quiddity> coefficient_set(const Config& c, const gf::Field& f) {
    const long n = static_cast<long>(c.size());
    const int k = static_cast<int>(c.front().size());
    const auto lift = constant_det_lift(c, f);
    if (!lift) return {};
    const frieze::Quiddity base = coefficients_of_lift(lift->vectors, f);
    const long g = std::gcd<long>(k, n);
    std::set<frieze::Quiddity> out;
    std::vector<long> mu(static_cast<std::size_t>(g), 1);  // codes of nonzero elements
    for (;;) {
        frieze::Quiddity trans(f, k, n);
        for (int j = 1; j <= k - 1; ++j)
            for (long i = 1; i <= n; ++i) {
                const Fe num = f.elem(mu[static_cast<std::size_t>((i + j + 1) % g)]);
                const Fe den = f.elem(mu[static_cast<std::size_t>((i + 1) % g)]);
                trans.set(j, i, num / den * base.at(j, i));
            }
        out.insert(trans);
        std::size_t pos = mu.size();
        while (pos > 0 && mu[pos - 1] == f.q() - 1) mu[--pos] = 1;
        if (pos == 0) break;
        ++mu[pos - 1];
    }
    return {out.begin(), out.end()};
}

Decomposition maximal_decomposition(const frieze::Quiddity& q) {
    const long g = std::gcd<long>(q.k(), q.n());
    std::vector<int> parent(static_cast<std::size_t>(g));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int j = 1; j <= q.k() - 1; ++j)
        for (long i = 1; i <= q.n(); ++i) {
            if (q.at(j, i).is_zero()) continue;
            const int a = find(static_cast<int>((i + 1) % g));
            const int b = find(static_cast<int>((i + j + 1) % g));
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    Decomposition dec;
    dec.g = static_cast<int>(g);
    dec.part_of.assign(static_cast<std::size_t>(g), -1);
    for (int v = 0; v < g; ++v) {
        const int root = find(v);
        if (dec.part_of[static_cast<std::size_t>(root)] == -1)
            dec.part_of[static_cast<std::size_t>(root)] = dec.parts++;
        dec.part_of[static_cast<std::size_t>(v)] =
            dec.part_of[static_cast<std::size_t>(root)];
    }
    return dec;
}

Config apply_matrix(const Matrix& m, const Config& c) {
    Config out;
    out.reserve(c.size());
    for (const Vec& v : c) out.push_back(linalg::proj_normalize(m * v));
    return out;
}

// ---------------------------------------------------------------------------
// family registry

namespace {

DfsSpec start_spec(int k, long n) {
    DfsSpec s;
    s.k = k;
    s.n = n;
    return s;
}

std::vector<long> window_positions(long i, int k, long n) {
    std::vector<long> pos;
    for (int t = 0; t < k; ++t) pos.push_back(wrap0(i + t, n) + 1);
    return pos;
}

// all cyclic k-windows independent, with per-start overrides:
// +1 independent, -1 dependent, 0 unconstrained
void add_windows(DfsSpec& s, const std::vector<std::pair<long, int>>& overrides) {
    for (long i = 1; i <= s.n; ++i) {
        int req = +1;
        for (const auto& [at, r] : overrides)
            if (at == i) req = r;
        if (req == 0) continue;
        s.tuples.push_back({window_positions(i, s.k, s.n), req > 0});
    }
}

void require_k(const std::string& name, int given, int want) {
    if (given != 0 && given != want)
        throw invalid_parameter("family " + name + " has order " +
                                std::to_string(want) + ", not " +
                                std::to_string(given));
}

}  // namespace

DfsSpec family_spec(const std::string& name, long n, int k) {
    if (name == "base" || name == "base*") {
        if (k < 2) throw invalid_parameter("base families need an explicit order k >= 2");
        if (n < k) throw invalid_parameter("period must be at least the order");
        DfsSpec s = start_spec(k, n);
        add_windows(s, {});
        if (name == "base*") s.leaf = LeafFilter::star;
        return s;
    }
    if (name.rfind("c3", 0) == 0) {
        require_k(name, k, 3);
        if (n < 3) throw invalid_parameter("order 3 families need n >= 3");
        DfsSpec s = start_spec(3, n);
        const long r = n % 3;
        if (name == "c3") {
            add_windows(s, {});
        } else if (name == "c3+-") {
            add_windows(s, {{n - 1, +1}, {n, -1}});
        } else if (name == "c3--") {
            add_windows(s, {{n - 1, -1}, {n, -1}});
        } else if (name == "c3*" || name == "c3**") {
            if (r != 0)
                throw invalid_parameter(name + " needs the period divisible by 3");
            add_windows(s, {});
            s.leaf = name == "c3*" ? LeafFilter::star : LeafFilter::star_one;
        } else if (name == "c3+-*") {
            add_windows(s, {{n - 1, +1}, {n, -1}});
            if (r == 0)
                s.leaf = LeafFilter::star_one;
            else if (r == 1)
                s.leaf = LeafFilter::wrap_product_identity;
            else
                s.leaf = LeafFilter::w2_collinear;
        } else if (name == "c3--*" || name == "c3--**") {
            if (r != 2)
                throw invalid_parameter(name + " needs period 2 modulo 3");
            add_windows(s, {{n - 1, -1}, {n, -1}});
            s.leaf = name == "c3--*" ? LeafFilter::w1_w2_collinear
                                     : LeafFilter::w1_collinear;
        } else {
            throw invalid_parameter("unknown family " + name);
        }
        s.distinct.push_back({n, 1});
        return s;
    }
    if (name.rfind("c4", 0) == 0) {
        require_k(name, k, 4);
        DfsSpec s = start_spec(4, n);
        const bool bracket = name.find('[') != std::string::npos;
        if (!bracket) {
            if (n < 4) throw invalid_parameter("order 4 families need n >= 4");
            if (name == "c4" || name == "c4*") {
                add_windows(s, {});
                if (name == "c4*") s.leaf = LeafFilter::star;
            } else if (name.size() == 5) {  // c4 followed by three signs
                auto sg = [&](std::size_t p) { return name[p] == '+' ? +1 : -1; };
                if (name.find_first_not_of("+-", 2) != std::string::npos)
                    throw invalid_parameter("unknown family " + name);
                add_windows(s, {{n - 2, sg(2)}, {n - 1, sg(3)}, {n, sg(4)}});
            } else {
                throw invalid_parameter("unknown family " + name);
            }
            s.tuples.push_back({{wrap0(n - 1, n) + 1, n, 1}, true});
            s.tuples.push_back({{n, 1, 2}, true});
            return s;
        }
        if (n < 5) throw invalid_parameter("bracket families need n >= 5");
        for (long i = 1; i <= n - 3; ++i)
            s.tuples.push_back({window_positions(i, 4, n), true});
        if (name == "c4+(-)[+]" || name == "c4+(-)[-]" || name == "c4-(-)[+]") {
            const bool s1 = name[2] == '+';
            const bool s2 = name[name.size() - 2] == '+';
            s.tuples.push_back({window_positions(n - 2, 4, n), s1});
            s.tuples.push_back({{n - 1, n, 1}, true});
            s.tuples.push_back({{n, 1, 2}, false});
            s.tuples.push_back({{n - 1, 1, 2, 3}, s2});
        } else if (name == "c4(--)[+]") {
            s.tuples.push_back({{n - 1, n, 1}, false});
            s.tuples.push_back({{n, 1, 2}, false});
            s.tuples.push_back({{n - 2, 1, 2, 3}, true});
            s.distinct.push_back({n, 1});
        } else {
            throw invalid_parameter("unknown family " + name);
        }
        return s;
    }
    throw invalid_parameter("unknown family " + name);
}

std::vector<std::string> family_names() {
    return {"base",  "base*", "c3",        "c3+-",      "c3--",      "c3*",
            "c3**",  "c3+-*", "c3--*",     "c3--**",    "c4",        "c4++-",
            "c4+--", "c4-+-", "c4---",     "c4*",       "c4+(-)[+]", "c4+(-)[-]",
            "c4-(-)[+]",      "c4(--)[+]"};
}

// ---------------------------------------------------------------------------
// search engine

namespace {

// Gaussian elimination on raw codes; scratch reused across calls.
class RawGauss {
public:
    explicit RawGauss(const gf::Field& f) : f_(f) {}

    int rank(const std::uint16_t* const* rows, int nrows, int ncols) {
        m_.assign(static_cast<std::size_t>(nrows) * ncols, 0);
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < ncols; ++c)
                m_[static_cast<std::size_t>(r) * ncols + c] = rows[r][c];
        int rank = 0;
        for (int c = 0; c < ncols && rank < nrows; ++c) {
            int piv = rank;
            while (piv < nrows && at(piv, c, ncols) == 0) ++piv;
            if (piv == nrows) continue;
            if (piv != rank)
                for (int cc = c; cc < ncols; ++cc)
                    std::swap(at(piv, cc, ncols), at(rank, cc, ncols));
            const std::uint16_t inv = f_.inv(at(rank, c, ncols));
            for (int r = piv + 1; r < nrows; ++r) {
                const std::uint16_t factor = f_.mul(at(r, c, ncols), inv);
                if (factor == 0) continue;
                for (int cc = c; cc < ncols; ++cc)
                    at(r, cc, ncols) = f_.sub(at(r, cc, ncols),
                                              f_.mul(factor, at(rank, cc, ncols)));
            }
            ++rank;
        }
        return rank;
    }

    std::uint16_t det(const std::uint16_t* const* rows, int k) {
        m_.assign(static_cast<std::size_t>(k) * k, 0);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                m_[static_cast<std::size_t>(r) * k + c] = rows[r][c];
        std::uint16_t d = f_.one().code();
        for (int c = 0; c < k; ++c) {
            int piv = c;
            while (piv < k && at(piv, c, k) == 0) ++piv;
            if (piv == k) return 0;
            if (piv != c) {
                for (int cc = c; cc < k; ++cc) std::swap(at(piv, cc, k), at(c, cc, k));
                d = f_.neg(d);
            }
            const std::uint16_t p = at(c, c, k);
            d = f_.mul(d, p);
            const std::uint16_t inv = f_.inv(p);
            for (int r = c + 1; r < k; ++r) {
                const std::uint16_t factor = f_.mul(at(r, c, k), inv);
                if (factor == 0) continue;
                for (int cc = c; cc < k; ++cc)
                    at(r, cc, k) = f_.sub(at(r, cc, k), f_.mul(factor, at(c, cc, k)));
            }
        }
        return d;
    }

private:
    std::uint16_t& at(int r, int c, int ncols) {
        return m_[static_cast<std::size_t>(r) * ncols + c];
    }
    const gf::Field& f_;
    std::vector<std::uint16_t> m_;
};

struct Check {
    bool is_rank = true;
    std::vector<int> pos;  // 0-based tuple slots
    bool independent = true;
};

void validate_spec(const gf::Field& f, const DfsSpec& spec) {
    if (spec.k < 2) throw invalid_parameter("search needs order k >= 2");
    if (spec.n < 1) throw invalid_parameter("search needs n >= 1");
    (void)f;
    auto check_pos = [&](long p) {
        if (p < 1 || p > spec.n)
            throw invalid_parameter("constraint position " + std::to_string(p) +
                                    " outside [1, n]");
    };
    for (const auto& t : spec.tuples) {
        if (t.positions.empty())
            throw invalid_parameter("empty tuple constraint");
        for (long p : t.positions) check_pos(p);
    }
    for (const auto& d : spec.distinct) {
        check_pos(d.i);
        check_pos(d.j);
    }
    switch (spec.leaf) {
        case LeafFilter::none:
        case LeafFilter::star:
            break;
        case LeafFilter::star_one:
            if (std::gcd<long>(spec.k, spec.n) < 2)
                throw invalid_parameter("single product equality needs gcd(k, n) > 1");
            break;
        case LeafFilter::wrap_product_identity:
            if (spec.k != 3 || spec.n % 3 != 1 || spec.n < 4)
                throw invalid_parameter(
                    "wrap product identity needs order 3 and period 1 modulo 3");
            break;
        case LeafFilter::w2_collinear:
        case LeafFilter::w1_collinear:
        case LeafFilter::w1_w2_collinear:
            if (spec.k != 3 || spec.n % 3 != 2 || spec.n < 5)
                throw invalid_parameter(
                    "wrap vector filters need order 3 and period 2 modulo 3");
            break;
    }
}

class ConfigDfs {
public:
    ConfigDfs(const PointTable& table, const DfsSpec& spec,
              unsigned long long node_cap,
              std::atomic<unsigned long long>& visited, std::atomic<bool>& stop,
              std::function<void(const std::vector<std::uint32_t>&)> sink)
        : table_(table), f_(table.field()), spec_(spec), gauss_(f_),
          node_cap_(node_cap), visited_(visited), stop_(stop),
          sink_(std::move(sink)), n_(spec.n), k_(spec.k),
          g_(std::gcd<long>(spec.k, spec.n)),
          tup_(static_cast<std::size_t>(spec.n), 0),
          dets_(static_cast<std::size_t>(spec.n), 0),
          checks_(static_cast<std::size_t>(spec.n)) {
        for (const auto& t : spec.tuples) {
            Check c;
            c.is_rank = true;
            for (long p : t.positions) c.pos.push_back(static_cast<int>(p - 1));
            c.independent = t.independent;
            const int trigger = *std::max_element(c.pos.begin(), c.pos.end());
            checks_[static_cast<std::size_t>(trigger)].push_back(std::move(c));
        }
        for (const auto& d : spec.distinct) {
            Check c;
            c.is_rank = false;
            c.pos = {static_cast<int>(d.i - 1), static_cast<int>(d.j - 1)};
            const int trigger = std::max(c.pos[0], c.pos[1]);
            checks_[static_cast<std::size_t>(trigger)].push_back(std::move(c));
        }
        std::size_t rows = static_cast<std::size_t>(k_);
        for (const auto& t : spec.tuples) rows = std::max(rows, t.positions.size());
        row_ptrs_.resize(rows);
    }

    void run_branch(std::size_t first) {
        tup_[0] = static_cast<std::uint32_t>(first);
        tick();
        if (passes(0)) descend(1);
        flush();
    }

    void run_all() {
        for (std::size_t id = 0; id < table_.count(); ++id) {
            tup_[0] = static_cast<std::uint32_t>(id);
            tick();
            if (passes(0)) descend(1);
        }
        flush();
    }

    [[nodiscard]] unsigned long long accepted() const { return accepted_; }

private:
    void flush() {
        if (local_ == 0) return;
        visited_.fetch_add(local_, std::memory_order_relaxed);
        local_ = 0;
    }

    void tick() {
        ++local_;
        if (node_cap_ != 0 &&
            visited_.load(std::memory_order_relaxed) + local_ > node_cap_) {
            flush();
            stop_.store(true, std::memory_order_relaxed);
            throw resource_limit("node cap " + std::to_string(node_cap_) +
                                     " exceeded while searching configurations",
                                 visited_.load(std::memory_order_relaxed));
        }
        if (local_ >= 1024) flush();
    }

    bool passes(int depth) {
        for (const Check& c : checks_[static_cast<std::size_t>(depth)]) {
            if (c.is_rank) {
                const int nrows = static_cast<int>(c.pos.size());
                for (int r = 0; r < nrows; ++r)
                    row_ptrs_[static_cast<std::size_t>(r)] =
                        table_.codes(tup_[static_cast<std::size_t>(c.pos[r])]);
                const int want = std::min<int>(nrows, k_);
                const bool indep = gauss_.rank(row_ptrs_.data(), nrows, k_) == want &&
                                   nrows <= k_;
                if (indep != c.independent) return false;
            } else {
                if (tup_[static_cast<std::size_t>(c.pos[0])] ==
                    tup_[static_cast<std::size_t>(c.pos[1])])
                    return false;
            }
        }
        return true;
    }

    void descend(long d) {
        if (d == n_) {
            if (leaf_ok()) {
                ++accepted_;
                if (sink_) sink_(tup_);
            }
            return;
        }
        for (std::size_t id = 0; id < table_.count(); ++id) {
            if (stop_.load(std::memory_order_relaxed)) return;
            tup_[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(id);
            tick();
            if (passes(static_cast<int>(d))) descend(d + 1);
        }
    }

    std::uint16_t window_det(long i) {
        for (int t = 0; t < k_; ++t)
            row_ptrs_[static_cast<std::size_t>(t)] =
                table_.codes(tup_[static_cast<std::size_t>(wrap0(i + t, n_))]);
        return gauss_.det(row_ptrs_.data(), k_);
    }

    void fill_dets() {
        for (long i = 1; i <= n_; ++i)
            dets_[static_cast<std::size_t>(i - 1)] = window_det(i);
    }

    // the product equalities compare twisted determinants; the twist only
    // shows for even k, where each wrapped entry contributes a sign
    bool star_holds(long upto) {
        for (long i = 1; i <= upto; ++i) {
            std::uint16_t lhs = f_.one().code(), rhs = f_.one().code();
            for (long s = 0; s < n_ / g_; ++s) {
                lhs = f_.mul(lhs, twisted_det(i + g_ * s));
                rhs = f_.mul(rhs, twisted_det(i + 1 + g_ * s));
            }
            if (lhs != rhs) return false;
        }
        return true;
    }

    std::uint16_t twisted_det(long i) {
        std::uint16_t d = dets_[static_cast<std::size_t>(wrap0(i, n_))];
        if (k_ % 2 == 0) {
            const long wrapped = wrap0(i, n_) + 1 + k_ - 1 - n_;
            if (wrapped > 0 && wrapped % 2 == 1) d = f_.neg(d);
        }
        return d;
    }

    // W1 = A v_{n-1} - B v_1, W2 = B v_n - C v_2 with the diagonal det products
    void wrap_vectors(std::uint16_t* w1, std::uint16_t* w2) {
        std::uint16_t A = f_.one().code(), B = A, C = A;
        for (long i = 1; i <= n_ - 4; i += 3)
            A = f_.mul(A, dets_[static_cast<std::size_t>(i - 1)]);
        for (long i = 2; i <= n_ - 3; i += 3)
            B = f_.mul(B, dets_[static_cast<std::size_t>(i - 1)]);
        for (long i = 3; i <= n_ - 2; i += 3)
            C = f_.mul(C, dets_[static_cast<std::size_t>(i - 1)]);
        const std::uint16_t* vnm1 = table_.codes(tup_[static_cast<std::size_t>(n_ - 2)]);
        const std::uint16_t* v1 = table_.codes(tup_[0]);
        const std::uint16_t* vn = table_.codes(tup_[static_cast<std::size_t>(n_ - 1)]);
        const std::uint16_t* v2 = table_.codes(tup_[1]);
        for (int t = 0; t < k_; ++t) {
            w1[t] = f_.sub(f_.mul(A, vnm1[t]), f_.mul(B, v1[t]));
            w2[t] = f_.sub(f_.mul(B, vn[t]), f_.mul(C, v2[t]));
        }
    }

    bool collinear(const std::uint16_t* a, const std::uint16_t* b) {
        const std::uint16_t* rows[2] = {a, b};
        return gauss_.rank(rows, 2, k_) <= 1;
    }

    bool leaf_ok() {
        if (spec_.leaf == LeafFilter::none) return true;
        fill_dets();
        switch (spec_.leaf) {
            case LeafFilter::star:
                return star_holds(g_ - 1);
            case LeafFilter::star_one:
                return star_holds(1);
            case LeafFilter::wrap_product_identity: {
                std::uint16_t lhs = f_.one().code();
                for (long i = 1; i <= n_ - 3; i += 3)
                    lhs = f_.mul(lhs, dets_[static_cast<std::size_t>(i - 1)]);
                std::uint16_t rhs = f_.one().code();
                for (long i = 3; i <= n_ - 4; i += 3)
                    rhs = f_.mul(rhs, dets_[static_cast<std::size_t>(i - 1)]);
                const std::uint16_t* rows[3] = {
                    table_.codes(tup_[static_cast<std::size_t>(n_ - 2)]),
                    table_.codes(tup_[0]), table_.codes(tup_[1])};
                rhs = f_.mul(rhs, gauss_.det(rows, 3));
                return lhs == rhs;
            }
            case LeafFilter::w2_collinear: {
                std::uint16_t w1[8], w2[8];
                wrap_vectors(w1, w2);
                return collinear(w2, table_.codes(tup_[0]));
            }
            case LeafFilter::w1_collinear: {
                std::uint16_t w1[8], w2[8];
                wrap_vectors(w1, w2);
                return collinear(w1, table_.codes(tup_[static_cast<std::size_t>(n_ - 1)]));
            }
            case LeafFilter::w1_w2_collinear: {
                std::uint16_t w1[8], w2[8];
                wrap_vectors(w1, w2);
                return collinear(w1, table_.codes(tup_[static_cast<std::size_t>(n_ - 1)])) &&
                       collinear(w2, table_.codes(tup_[0]));
            }
            default:
                return true;
        }
    }

    const PointTable& table_;
    const gf::Field& f_;
    const DfsSpec& spec_;
    RawGauss gauss_;
    const unsigned long long node_cap_;
    std::atomic<unsigned long long>& visited_;
    std::atomic<bool>& stop_;
    std::function<void(const std::vector<std::uint32_t>&)> sink_;
    const long n_;
    const int k_;
    const long g_;
    std::vector<std::uint32_t> tup_;
    std::vector<std::uint16_t> dets_;
    std::vector<std::vector<Check>> checks_;
    std::vector<const std::uint16_t*> row_ptrs_;
    unsigned long long accepted_ = 0;
    unsigned long long local_ = 0;
};

}  // namespace

cpp_int count_tuples(const gf::Field& f, const DfsSpec& spec, const DfsOptions& opts) {
    validate_spec(f, spec);
    const PointTable table(f, spec.k);
    std::atomic<unsigned long long> visited{0};
    std::atomic<bool> stop{false};
    const int workers = opts.workers < 1 ? 1 : opts.workers;
    if (workers == 1) {
        ConfigDfs dfs(table, spec, opts.node_cap, visited, stop, nullptr);
        dfs.run_all();
        return dfs.accepted();
    }
    std::vector<cpp_int> subtotal(static_cast<std::size_t>(workers), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                ConfigDfs dfs(table, spec, opts.node_cap, visited, stop, nullptr);
                for (std::size_t b = static_cast<std::size_t>(w); b < table.count();
                     b += static_cast<std::size_t>(workers)) {
                    if (stop.load(std::memory_order_relaxed)) break;
                    dfs.run_branch(b);
                }
                subtotal[static_cast<std::size_t>(w)] = dfs.accepted();
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    cpp_int total = 0;
    for (const cpp_int& s : subtotal) total += s;
    return total;
}

void for_each_tuple(const gf::Field& f, const DfsSpec& spec,
                    const std::function<void(const PointTable&,
                                             const std::vector<std::uint32_t>&)>& fn,
                    const DfsOptions& opts) {
    validate_spec(f, spec);
    const PointTable table(f, spec.k);
    std::atomic<unsigned long long> visited{0};
    std::atomic<bool> stop{false};
    const int workers = opts.workers < 1 ? 1 : opts.workers;
    if (workers == 1) {
        ConfigDfs dfs(table, spec, opts.node_cap, visited, stop,
                      [&](const std::vector<std::uint32_t>& tup) { fn(table, tup); });
        dfs.run_all();
        return;
    }
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> found(
        static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                auto& mine = found[static_cast<std::size_t>(w)];
                ConfigDfs dfs(table, spec, opts.node_cap, visited, stop,
                              [&](const std::vector<std::uint32_t>& tup) {
                                  mine.back().push_back(tup);
                              });
                for (std::size_t b = static_cast<std::size_t>(w); b < table.count();
                     b += static_cast<std::size_t>(workers)) {
                    if (stop.load(std::memory_order_relaxed)) break;
                    mine.emplace_back();
                    dfs.run_branch(b);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<std::size_t> next(static_cast<std::size_t>(workers), 0);
    for (std::size_t b = 0; b < table.count(); ++b) {
        const auto w = b % static_cast<std::size_t>(workers);
        auto& lists = found[w];
        if (next[w] >= lists.size()) break;
        for (const auto& tup : lists[next[w]]) fn(table, tup);
        ++next[w];
    }
}

}  // namespace friezelab::config
