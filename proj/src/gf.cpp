#include "friezelab/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace friezelab::gf {

namespace {

constexpr long kMaxQ = 1024;  // dense q*q tables beyond this get silly

bool prime_power(long q, int& p_out, int& e_out) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        p_out = static_cast<int>(q);
        e_out = 1;
        return true;
    }
    int e = 0;
    long m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) return false;
    p_out = static_cast<int>(p);
    e_out = e;
    return true;
}

// Dense polynomials over Z/p, coefficient i belongs to x^i.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const std::size_t deg_m = m.size() - 1;
    while (a.size() > deg_m) {
        const int lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - deg_m;
            for (std::size_t i = 0; i < m.size(); ++i) {
                auto& c = a[shift + i];
                c = (c - lead * m[i]) % p;
                if (c < 0) c += p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& m, int p) {
    const std::size_t deg = m.size() - 1;
    if (deg < 1) return false;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (long c = 0; c < count; ++c) {
            Poly div(d + 1, 0);
            long v = c;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<int>(v % p);
                v /= p;
            }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(long q) : q_(q) {
    if (!prime_power(q, p_, e_) || q < 2)
        throw invalid_parameter("field size " + std::to_string(q) +
                                " is not a prime power");
    if (q > kMaxQ)
        throw unsupported_parameters("field size " + std::to_string(q) +
                                     " exceeds the dense-table limit " +
                                     std::to_string(kMaxQ));

    // Modulus: e non-leading coefficients, constant term first. For e = 1 the
    // modulus is x itself. For e > 1, scan candidates in the canonical
    // coefficient order (constant term most significant) for irreducibility.
    Poly mod_full;  // full coefficient list, degree index order
    if (e_ == 1) {
        modulus_ = {0};
        mod_full = {0, 1};
    } else {
        std::vector<long> pw(e_ + 1, 1);
        for (int i = 1; i <= e_; ++i) pw[i] = pw[i - 1] * p_;
        for (long cand = 0; cand < pw[e_]; ++cand) {
            Poly full(e_ + 1, 0);
            full[e_] = 1;
            for (int j = 0; j < e_; ++j)
                full[j] = static_cast<int>(cand / pw[e_ - 1 - j] % p_);
            if (is_irreducible(full, p_)) {
                mod_full = full;
                modulus_.assign(full.begin(), full.end() - 1);
                break;
            }
        }
        if (mod_full.empty())
            throw invariant_violation("no irreducible modulus found for q = " +
                                      std::to_string(q));
    }

    // Element code -> coefficient vector: code digits in base p, constant
    // term most significant, so code order equals the canonical order.
    std::vector<long> pw(e_, 1);
    for (int i = 1; i < e_; ++i) pw[i] = pw[i - 1] * p_;
    auto decode = [&](long code) {
        Poly c(e_, 0);
        for (int j = 0; j < e_; ++j)
            c[j] = static_cast<int>(code / pw[e_ - 1 - j] % p_);
        trim(c);
        return c;
    };
    auto encode = [&](const Poly& c) {
        long code = 0;
        for (std::size_t j = 0; j < c.size(); ++j) code += c[j] * pw[e_ - 1 - j];
        return code;
    };
    one_ = static_cast<std::uint16_t>(encode({1}));

    const auto n = static_cast<std::size_t>(q_);
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.resize(n);
    std::vector<Poly> polys(n);
    for (std::size_t a = 0; a < n; ++a) polys[a] = decode(static_cast<long>(a));
    for (std::size_t a = 0; a < n; ++a) {
        Poly na = polys[a];
        for (auto& c : na) c = (p_ - c) % p_;
        trim(na);
        neg_[a] = static_cast<std::uint16_t>(encode(na));
        for (std::size_t b = a; b < n; ++b) {
            Poly s(std::max(polys[a].size(), polys[b].size()), 0);
            for (std::size_t i = 0; i < polys[a].size(); ++i) s[i] += polys[a][i];
            for (std::size_t i = 0; i < polys[b].size(); ++i)
                s[i] = (s[i] + polys[b][i]) % p_;
            trim(s);
            const auto sum = static_cast<std::uint16_t>(encode(s));
            add_[a * n + b] = add_[b * n + a] = sum;
            const Poly prod = poly_mod(poly_mul(polys[a], polys[b], p_), mod_full, p_);
            const auto pr = static_cast<std::uint16_t>(encode(prod));
            mul_[a * n + b] = mul_[b * n + a] = pr;
        }
    }
    for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
            if (mul_[a * n + b] == one_) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
}

Fe Field::elem(long code) const {
    if (code < 0 || code >= q_)
        throw invalid_parameter("element code " + std::to_string(code) +
                                " out of range for GF(" + std::to_string(q_) + ")");
    return {this, static_cast<std::uint16_t>(code)};
}

Fe Field::from_coeffs(const std::vector<long>& c) const {
    if (static_cast<int>(c.size()) > e_)
        throw invalid_parameter("coefficient vector longer than field degree");
    long code = 0;
    long pw = 1;
    for (int i = 1; i < e_; ++i) pw *= p_;
    for (std::size_t j = 0; j < c.size(); ++j) {
        long r = c[j] % p_;
        if (r < 0) r += p_;
        code += r * pw;
        pw /= p_;
    }
    return {this, static_cast<std::uint16_t>(code)};
}

std::vector<int> Field::coeffs(Fe a) const {
    if (&a.field() != this) throw invalid_parameter("element from another field");
    std::vector<int> c(e_, 0);
    long code = a.code();
    for (int j = e_ - 1; j >= 0; --j) {
        c[j] = static_cast<int>(code % p_);
        code /= p_;
    }
    return c;
}

long Field::io_value(Fe a) const {
    const auto c = coeffs(a);
    long v = 0;
    long pw = 1;
    for (int j = 0; j < e_; ++j) {
        v += c[j] * pw;
        pw *= p_;
    }
    return v;
}

Fe Field::from_io(long v) const {
    if (v < 0 || v >= q_)
        throw invalid_parameter("packed element value " + std::to_string(v) +
                                " out of range for GF(" + std::to_string(q_) + ")");
    std::vector<long> c(e_, 0);
    for (int j = 0; j < e_; ++j) {
        c[j] = v % p_;
        v /= p_;
    }
    return from_coeffs(c);
}

std::uint16_t Field::inv(std::uint16_t a) const {
    if (a == 0) throw division_by_zero("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

std::uint16_t Field::pow(std::uint16_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    std::uint16_t r = one_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

const Field& make_field(long q) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    return *it->second;
}

const Field& Fe::field() const {
    if (f_ == nullptr) throw invariant_violation("element without a field");
    return *f_;
}

bool Fe::is_one() const { return f_ != nullptr && code_ == f_->one().code(); }

namespace {
const Field& common_field(Fe a, Fe b) {
    const Field& f = a.field();
    if (&f != &b.field())
        throw invalid_parameter("mixed-field arithmetic between GF(" +
                                std::to_string(f.q()) + ") and GF(" +
                                std::to_string(b.field().q()) + ")");
    return f;
}
}  // namespace

Fe operator+(Fe a, Fe b) {
    const Field& f = common_field(a, b);
    return {&f, f.add(a.code(), b.code())};
}
Fe operator-(Fe a, Fe b) {
    const Field& f = common_field(a, b);
    return {&f, f.sub(a.code(), b.code())};
}
Fe operator*(Fe a, Fe b) {
    const Field& f = common_field(a, b);
    return {&f, f.mul(a.code(), b.code())};
}
Fe operator/(Fe a, Fe b) {
    const Field& f = common_field(a, b);
    return {&f, f.mul(a.code(), f.inv(b.code()))};
}
Fe operator-(Fe a) {
    const Field& f = a.field();
    return {&f, f.neg(a.code())};
}
bool operator==(Fe a, Fe b) {
    if (a.f_ == b.f_) return a.code_ == b.code_;
    common_field(a, b);  // throws
    return false;
}

Fe Fe::inv() const {
    const Field& f = field();
    return {&f, f.inv(code_)};
}

Fe Fe::pow(long long e) const {
    const Field& f = field();
    return {&f, f.pow(code_, e)};
}

std::vector<Fe> all_elements(const Field& f) {
    std::vector<Fe> out;
    out.reserve(f.q());
    for (long c = 0; c < f.q(); ++c) out.emplace_back(&f, static_cast<std::uint16_t>(c));
    return out;
}

std::optional<Fe> nth_root(Fe a, long long t) {
    if (t < 1) throw invalid_parameter("root index must be positive");
    if (a.is_zero()) throw invalid_parameter("nth_root of zero");
    const Field& f = a.field();
    const long long g = std::gcd<long long>(t, f.q() - 1);
    if (f.pow(a.code(), (f.q() - 1) / g) != f.one().code()) return std::nullopt;
    for (long c = 0; c < f.q(); ++c)
        if (f.pow(static_cast<std::uint16_t>(c), t) == a.code())
            return Fe{&f, static_cast<std::uint16_t>(c)};
    throw invariant_violation("root existence criterion passed but no root found");
}

}  // namespace friezelab::gf
