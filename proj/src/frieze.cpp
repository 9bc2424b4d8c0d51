#include "friezelab/frieze.hpp"

#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <utility>

namespace friezelab::frieze {

namespace {

void check_shape(int k, long n, bool for_pattern) {
    if (k < 2) throw invalid_parameter("order must be at least 2");
    if (for_pattern) {
        if (n <= k)
            throw invalid_parameter("period must exceed the order");
        if (n == k + 1)
            throw unsupported_parameters("width-zero patterns are out of scope");
    } else if (n < 1) {
        throw invalid_parameter("period must be positive");
    }
}

long wrap(long i, long n) {
    long r = (i - 1) % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace

Fe alt_sign(const gf::Field& f, long e) {
    return (e % 2 == 0) ? f.one() : -f.one();
}

Quiddity::Quiddity(const gf::Field& f, int k, long n)
    : f_(&f), k_(k), n_(n),
      a_((k < 2 || n < 1) ? 0 : static_cast<std::size_t>(k - 1) * n, f.zero()) {
    check_shape(k, n, false);
}

std::size_t Quiddity::idx(int s, long i) const {
    if (s < 1 || s > k_ - 1)
        throw invalid_parameter("quiddity row " + std::to_string(s) +
                                " outside [1, " + std::to_string(k_ - 1) + "]");
    return static_cast<std::size_t>(s - 1) * n_ + wrap(i, n_);
}

bool operator<(const Quiddity& a, const Quiddity& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t t = 0; t < a.a_.size(); ++t)
        if (a.a_[t].code() != b.a_[t].code()) return a.a_[t].code() < b.a_[t].code();
    return false;
}

Matrix companion_matrix(const Quiddity& q, long i) {
    const gf::Field& f = q.field();
    const int k = q.k();
    Matrix m(f, k, k);
    for (int t = 0; t <= k - 2; ++t)
        m.at(0, t) = alt_sign(f, t) * q.at(k - 1 - t, i + t);
    m.at(0, k - 1) = alt_sign(f, k - 1);
    for (int r = 1; r < k; ++r) m.at(r, r - 1) = f.one();
    return m;
}

bool check_quiddity(const Quiddity& q) {
    const gf::Field& f = q.field();
    const int k = q.k();
    Matrix p = Matrix::identity(f, k);
    for (long i = 1; i <= q.n(); ++i) p = p * companion_matrix(q, i);
    Matrix target = Matrix::identity(f, k);
    const Fe s = alt_sign(f, k - 1);
    for (int d = 0; d < k; ++d) target.at(d, d) = s;
    return p == target;
}

Frieze::Frieze(const gf::Field& f, int k, long n)
    : f_(&f), k_(k), n_(n),
      e_((k < 2 || n <= k + 1) ? 0 : static_cast<std::size_t>(n + k - 1) * n,
         f.zero()) {
    check_shape(k, n, true);
    for (long i = 1; i <= n; ++i) set(0, i, f.one());
}

std::size_t Frieze::idx(long j, long i) const {
    if (j < j_min() || j > j_max())
        throw invalid_parameter("row " + std::to_string(j) + " outside [" +
                                std::to_string(j_min()) + ", " +
                                std::to_string(j_max()) + "]");
    return static_cast<std::size_t>(j + k_ - 1) * n_ + wrap(i, n_);
}

Frieze build_frieze_unchecked(const Quiddity& q) {
    const gf::Field& f = q.field();
    const int k = q.k();
    const long n = q.n();
    Frieze fr(f, k, n);
    for (long j = 1; j <= n - 1; ++j)
        for (long i = 1; i <= n; ++i) {
            Fe v = f.zero();
            for (int t = 0; t <= k - 2; ++t)
                v += alt_sign(f, t) * q.at(k - 1 - t, i + t) * fr.at(j - t - 1, i + t + 1);
            v += alt_sign(f, k - 1) * fr.at(j - k, i + k);
            fr.set(j, i, v);
        }
    return fr;
}

Frieze build_frieze(const Quiddity& q) {
    Frieze fr = build_frieze_unchecked(q);
    const long w = fr.w();
    for (long i = 1; i <= fr.n(); ++i) {
        if (!fr.at(w + 1, i).is_one())
            throw precondition_violation("quiddity does not close: bottom ones row fails");
        for (long j = w + 2; j <= fr.j_max(); ++j)
            if (!fr.at(j, i).is_zero())
                throw precondition_violation("quiddity does not close: bottom zero rows fail");
    }
    return fr;
}

Matrix unit_diamond(const Frieze& fr, long j, long i) {
    if (j < 0 || j > fr.w() + 1)
        throw invalid_parameter("unit diamond row outside [0, w+1]");
    const int k = fr.k();
    Matrix m(fr.field(), k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m.at(r, c) = fr.at(j + c - r, i + r);
    return m;
}

Matrix null_diamond(const Frieze& fr, long j, long i) {
    if (j < 1 || j > fr.w())
        throw invalid_parameter("null diamond row outside [1, w]");
    const int k = fr.k();
    Matrix m(fr.field(), k + 1, k + 1);
    for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k; ++c) m.at(r, c) = fr.at(j + c - r, i + r);
    return m;
}

namespace {
void report_failure(FriezeReport& rep, std::string msg) {
    rep.valid = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
}
}  // namespace

FriezeReport validate_frieze(const Frieze& fr) {
    FriezeReport rep;
    const long n = fr.n();
    const long w = fr.w();
    for (long i = 1; i <= n; ++i) {
        for (long j = fr.j_min(); j <= -1; ++j)
            if (!fr.at(j, i).is_zero())
                report_failure(rep, "top zero row " + std::to_string(j) +
                                        " broken at column " + std::to_string(i));
        if (!fr.at(0, i).is_one())
            report_failure(rep, "top ones row broken at column " + std::to_string(i));
        if (!fr.at(w + 1, i).is_one())
            report_failure(rep, "bottom ones row broken at column " + std::to_string(i));
        for (long j = w + 2; j <= fr.j_max(); ++j)
            if (!fr.at(j, i).is_zero())
                report_failure(rep, "bottom zero row " + std::to_string(j) +
                                        " broken at column " + std::to_string(i));
    }
    for (long j = 0; j <= w + 1; ++j)
        for (long i = 1; i <= n; ++i) {
            ++rep.unit_diamonds;
            if (!unit_diamond(fr, j, i).det().is_one())
                report_failure(rep, "unit diamond at row " + std::to_string(j) +
                                        ", column " + std::to_string(i) +
                                        " has determinant != 1");
        }
    for (long j = 1; j <= w; ++j)
        for (long i = 1; i <= n; ++i) {
            ++rep.null_diamonds;
            if (!null_diamond(fr, j, i).det().is_zero())
                report_failure(rep, "null diamond at row " + std::to_string(j) +
                                        ", column " + std::to_string(i) +
                                        " has determinant != 0");
        }
    return rep;
}

Quiddity extract_quiddity(const Frieze& fr) {
    const gf::Field& f = fr.field();
    const int k = fr.k();
    const long n = fr.n();
    Quiddity q(f, k, n);
    for (long i = 1; i <= n; ++i) q.set(k - 1, i, fr.at(1, i));
    for (int s = k - 2; s >= 1; --s)
        for (long i = 1; i <= n; ++i) {
            Fe v = fr.at(k - s, i);
            for (int t = 0; t <= k - 2 - s; ++t)
                v -= alt_sign(f, t) * q.at(k - 1 - t, i + t) * fr.at(k - s - t - 1, i + t + 1);
            q.set(s, i + k - 1 - s, alt_sign(f, k - 1 - s) * v);
        }
    return q;
}

std::vector<Vec> frieze_vectors(const Frieze& fr) {
    const gf::Field& f = fr.field();
    const int k = fr.k();
    const long n = fr.n();
    const Fe s = alt_sign(f, k - 1);
    std::vector<Vec> out;
    out.reserve(n);
    for (long i = 1; i <= n; ++i) {
        Vec v;
        v.reserve(k);
        if (i <= k - 1)
            for (int t = 0; t < k; ++t) v.push_back(s * fr.at(t - i, i));
        else
            for (int t = 0; t < k; ++t) v.push_back(fr.at(n - i + t, i));
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// One depth-first pass over the free first rows of M(start..n-1), with the
// running product maintained incrementally. Shared by the streaming and the
// buffered multi-worker paths.
class QuiddityDfs {
public:
    QuiddityDfs(const gf::Field& f, int k, long n,
                const std::function<void(const Quiddity&)>& emit,
                unsigned long long node_cap,
                std::atomic<unsigned long long>& visited,
                std::atomic<bool>& stop)
        : f_(f), k_(k), n_(n), emit_(emit), node_cap_(node_cap),
          visited_(visited), stop_(stop),
          rows_(static_cast<std::size_t>(n),
                std::vector<Fe>(static_cast<std::size_t>(k - 1), f.zero())),
          prod_(static_cast<std::size_t>(n), Matrix::identity(f, k)),
          sign_(alt_sign(f, k - 1)) {
        combos_ = 1;
        for (int t = 0; t < k - 1; ++t)
            combos_ *= static_cast<unsigned long long>(f.q());
    }

    // Runs depth 1 restricted to one first-row combination.
    void run_branch(unsigned long long combo) {
        place(1, combo);
        flush();
    }

    void run_all() {
        for (unsigned long long c = 0; c < combos_; ++c) place(1, c);
        flush();
    }

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
                                     " exceeded while enumerating quiddities",
                                 visited_.load(std::memory_order_relaxed));
        }
        if (local_ >= 1024) flush();
    }

    // Decodes combo into the first row of M(d), updates the product, recurses.
    void place(long d, unsigned long long combo) {
        tick();
        auto& row = rows_[static_cast<std::size_t>(d - 1)];
        const long q = f_.q();
        for (int t = k_ - 2; t >= 0; --t) {
            row[static_cast<std::size_t>(t)] =
                f_.elem(static_cast<long>(combo % static_cast<unsigned long long>(q)));
            combo /= static_cast<unsigned long long>(q);
        }
        // product update: new columns are combinations of the previous
        // product's columns driven by the companion shape
        const Matrix& prev = (d == 1) ? id_ : prod_[static_cast<std::size_t>(d - 2)];
        Matrix& cur = prod_[static_cast<std::size_t>(d - 1)];
        for (int r = 0; r < k_; ++r) {
            const Fe p0 = prev.at(r, 0);
            for (int c = 0; c < k_ - 1; ++c)
                cur.at(r, c) = p0 * first_row_entry(row, c) + prev.at(r, c + 1);
            cur.at(r, k_ - 1) = p0 * sign_;
        }
        if (d == n_ - 1) {
            leaf();
            return;
        }
        for (unsigned long long c = 0; c < combos_; ++c) {
            if (stop_.load(std::memory_order_relaxed)) return;
            place(d + 1, c);
        }
    }

    // Entry c of the companion first row given the free values.
    [[nodiscard]] Fe first_row_entry(const std::vector<Fe>& row, int c) const {
        return (c % 2 == 0) ? row[static_cast<std::size_t>(c)]
                            : -row[static_cast<std::size_t>(c)];
    }

    void leaf() {
        const Matrix& p = prod_[static_cast<std::size_t>(n_ - 2)];
        Matrix last = p.inverse();
        if (!sign_.is_one())
            for (int r = 0; r < k_; ++r)
                for (int c = 0; c < k_; ++c) last.at(r, c) = sign_ * last.at(r, c);
        // companion shape: unit subdiagonal rows and the fixed corner sign
        for (int r = 1; r < k_; ++r)
            for (int c = 0; c < k_; ++c) {
                const Fe want = (c == r - 1) ? f_.one() : f_.zero();
                if (last.at(r, c) != want) return;
            }
        if (last.at(0, k_ - 1) != sign_) return;
        Quiddity out(f_, k_, n_);
        for (long d = 1; d <= n_ - 1; ++d)
            for (int t = 0; t <= k_ - 2; ++t)
                out.set(k_ - 1 - t, d + t,
                        rows_[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(t)]);
        for (int t = 0; t <= k_ - 2; ++t)
            out.set(k_ - 1 - t, n_ + t, alt_sign(f_, t) * last.at(0, t));
        emit_(out);
    }

    const gf::Field& f_;
    const int k_;
    const long n_;
    const std::function<void(const Quiddity&)>& emit_;
    const unsigned long long node_cap_;
    std::atomic<unsigned long long>& visited_;
    std::atomic<bool>& stop_;
    std::vector<std::vector<Fe>> rows_;
    std::vector<Matrix> prod_;
    const Matrix id_ = Matrix::identity(f_, k_);
    const Fe sign_;
    unsigned long long combos_ = 1;
    unsigned long long local_ = 0;
};

}  // namespace

void enumerate_quiddities(const gf::Field& f, int k, long n,
                          const std::function<void(const Quiddity&)>& fn,
                          const EnumerateOptions& opts) {
    check_shape(k, n, true);
    const int workers = opts.workers < 1 ? 1 : opts.workers;
    std::atomic<unsigned long long> visited{0};
    std::atomic<bool> stop{false};

    if (workers == 1) {
        QuiddityDfs dfs(f, k, n, fn, opts.node_cap, visited, stop);
        dfs.run_all();
        return;
    }

    unsigned long long branches = 1;
    for (int t = 0; t < k - 1; ++t) {
        if (branches > std::numeric_limits<unsigned long long>::max() /
                           static_cast<unsigned long long>(f.q()))
            throw unsupported_parameters("first-level branch count overflows");
        branches *= static_cast<unsigned long long>(f.q());
    }

    // Workers take interleaved first-level branches and buffer their finds;
    // the merge below emits them in branch order, so output is identical to
    // the single-worker stream.
    std::vector<std::vector<std::vector<Quiddity>>> found(
        static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                auto& mine = found[static_cast<std::size_t>(w)];
                auto sink = std::function<void(const Quiddity&)>(
                    [&](const Quiddity& q) { mine.back().push_back(q); });
                QuiddityDfs dfs(f, k, n, sink, opts.node_cap, visited, stop);
                for (unsigned long long b = static_cast<unsigned long long>(w);
                     b < branches; b += static_cast<unsigned long long>(workers)) {
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
    for (unsigned long long b = 0; b < branches; ++b) {
        const auto w = static_cast<std::size_t>(b % static_cast<unsigned long long>(workers));
        auto& lists = found[w];
        if (next[w] >= lists.size()) break;
        for (const Quiddity& q : lists[next[w]]) fn(q);
        ++next[w];
    }
}

}  // namespace friezelab::frieze
