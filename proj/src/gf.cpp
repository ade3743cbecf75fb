#include "motivecheck/gf.hpp"

#include <algorithm>
#include <string>

namespace motivecheck {

namespace {

const char* kErrcNames[] = {
    "non_prime",
    "char_two",
    "no_irreducible_found",
    "degenerate_algebra",
    "dimension_mismatch",
    "negative_twist",
    "twist_out_of_range",
    "rank_too_small",
    "not_split",
    "degenerate_point",
    "unresolved_atom",
    "bound_exceeded",
    "invalid_argument",
    "arithmetic_overflow",
    "internal_check_failed",
};

} // namespace

const char* errc_name(errc c) { return kErrcNames[static_cast<int>(c)]; }

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "u64 multiply");
    return r;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) raise(errc::arithmetic_overflow, "u64 add");
    return r;
}

std::uint64_t checked_pow_u64(std::uint64_t q, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul_u64(r, q);
    return r;
}

std::uint64_t proj_space_size(std::uint64_t q, int dim) {
    // 1 + q + ... + q^(dim-1)
    std::uint64_t r = 0, term = 1;
    for (int i = 0; i < dim; ++i) {
        r = checked_add_u64(r, term);
        if (i + 1 < dim) term = checked_mul_u64(term, q);
    }
    return r;
}

/// Polynomial arithmetic over a coefficient field given by callbacks; only
/// used while constructing a Gf, after which the flat tables take over.
class PolyCtx {
public:
    using elem = Gf::elem;

    PolyCtx(std::uint32_t coeff_q, int deg, std::vector<elem> modulus,
            elem (*cadd)(const void*, elem, elem), elem (*cmul)(const void*, elem, elem),
            elem (*cneg)(const void*, elem), const void* user)
        : coeff_q_(coeff_q), deg_(deg), modulus_(std::move(modulus)),
          cadd_(cadd), cmul_(cmul), cneg_(cneg), user_(user) {}

    std::uint32_t coeff_q() const { return coeff_q_; }
    int deg() const { return deg_; }

    std::vector<elem> decode(std::uint64_t idx) const {
        std::vector<elem> c(deg_);
        for (int i = 0; i < deg_; ++i) {
            c[i] = elem(idx % coeff_q_);
            idx /= coeff_q_;
        }
        return c;
    }

    std::uint64_t encode(const std::vector<elem>& c) const {
        std::uint64_t idx = 0;
        for (int i = deg_ - 1; i >= 0; --i) idx = idx * coeff_q_ + c[std::size_t(i)];
        return idx;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        std::vector<elem> ca = decode(a), cb = decode(b);
        std::vector<elem> prod(std::size_t(2 * deg_ - 1), 0);
        for (int i = 0; i < deg_; ++i) {
            if (ca[std::size_t(i)] == 0) continue;
            for (int j = 0; j < deg_; ++j) {
                std::size_t k = std::size_t(i + j);
                prod[k] = cadd_(user_, prod[k], cmul_(user_, ca[std::size_t(i)], cb[std::size_t(j)]));
            }
        }
        reduce(prod);
        prod.resize(std::size_t(deg_));
        return encode(prod);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// In-place remainder mod the (monic) modulus.
    void reduce(std::vector<elem>& c) const {
        for (int k = int(c.size()) - 1; k >= deg_; --k) {
            elem lead = c[std::size_t(k)];
            if (lead == 0) continue;
            c[std::size_t(k)] = 0;
            for (int j = 0; j < deg_; ++j) {
                elem t = cmul_(user_, lead, modulus_[std::size_t(j)]);
                c[std::size_t(k - deg_ + j)] = cadd_(user_, c[std::size_t(k - deg_ + j)], cneg_(user_, t));
            }
        }
    }

    /// True when `cand` (monic, degree d, given with d+1 coefficients) has a
    /// monic divisor of degree `dd`.
    bool has_divisor_of_degree(const std::vector<elem>& cand, int dd) const {
        std::uint64_t ndiv = 1;
        for (int i = 0; i < dd; ++i) ndiv *= coeff_q_;
        for (std::uint64_t t = 0; t < ndiv; ++t) {
            std::vector<elem> d(std::size_t(dd + 1));
            std::uint64_t idx = t;
            for (int i = 0; i < dd; ++i) {
                d[std::size_t(i)] = elem(idx % coeff_q_);
                idx /= coeff_q_;
            }
            d[std::size_t(dd)] = 1;
            if (divides(d, cand)) return true;
        }
        return false;
    }

private:
    bool divides(const std::vector<elem>& d, std::vector<elem> r) const {
        int dd = int(d.size()) - 1;
        for (int k = int(r.size()) - 1; k >= dd; --k) {
            elem lead = r[std::size_t(k)];
            if (lead == 0) continue;
            r[std::size_t(k)] = 0;
            for (int j = 0; j < dd; ++j)
                r[std::size_t(k - dd + j)] =
                    cadd_(user_, r[std::size_t(k - dd + j)], cneg_(user_, cmul_(user_, lead, d[std::size_t(j)])));
        }
        return std::all_of(r.begin(), r.end(), [](elem x) { return x == 0; });
    }

    std::uint32_t coeff_q_;
    int deg_;
    std::vector<elem> modulus_;
    elem (*cadd_)(const void*, elem, elem);
    elem (*cmul_)(const void*, elem, elem);
    elem (*cneg_)(const void*, elem);
    const void* user_;
};

namespace {

using elem = Gf::elem;

elem prime_add(const void* user, elem a, elem b) {
    auto p = *static_cast<const std::uint32_t*>(user);
    elem s = a + b;
    return s >= p ? s - p : s;
}

elem prime_mul(const void* user, elem a, elem b) {
    auto p = *static_cast<const std::uint32_t*>(user);
    return elem((std::uint64_t(a) * b) % p);
}

elem prime_neg(const void* user, elem a) {
    auto p = *static_cast<const std::uint32_t*>(user);
    return a == 0 ? 0 : p - a;
}

elem field_add(const void* user, elem a, elem b) { return static_cast<const Gf*>(user)->add(a, b); }
elem field_mul(const void* user, elem a, elem b) { return static_cast<const Gf*>(user)->mul(a, b); }
elem field_neg(const void* user, elem a) { return static_cast<const Gf*>(user)->neg(a); }

/// First monic irreducible of degree k over the coefficient field, in index
/// order of the non-leading coefficients.
std::vector<elem> find_irreducible(std::uint32_t coeff_q, int k,
                                   elem (*cadd)(const void*, elem, elem),
                                   elem (*cmul)(const void*, elem, elem),
                                   elem (*cneg)(const void*, elem), const void* user) {
    if (k == 1) return {0, 1};  // x
    std::uint64_t ncand = 1;
    for (int i = 0; i < k; ++i) ncand *= coeff_q;
    for (std::uint64_t c = 0; c < ncand; ++c) {
        std::vector<elem> cand(std::size_t(k + 1));
        std::uint64_t idx = c;
        for (int i = 0; i < k; ++i) {
            cand[std::size_t(i)] = elem(idx % coeff_q);
            idx /= coeff_q;
        }
        cand[std::size_t(k)] = 1;
        if (cand[0] == 0) continue;  // divisible by x
        PolyCtx probe(coeff_q, k, cand, cadd, cmul, cneg, user);
        bool reducible = false;
        for (int dd = 1; dd <= k / 2 && !reducible; ++dd)
            reducible = probe.has_divisor_of_degree(cand, dd);
        if (!reducible) return cand;
    }
    raise(errc::no_irreducible_found, "no irreducible modulus of degree " + std::to_string(k));
}

} // namespace

void Gf::build_tables(const PolyCtx& ctx) {
    std::uint64_t order = q_ - 1;
    auto factors = prime_factors(order);

    gen_ = 0;
    for (elem cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (auto r : factors) {
            if (ctx.pow(cand, order / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) raise(errc::internal_check_failed, "no multiplicative generator found");

    exp_.assign(std::size_t(2) * order, 0);
    log_.assign(q_, 0);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[std::size_t(i)] = elem(acc);
        exp_[std::size_t(i + order)] = elem(acc);
        log_[std::size_t(acc)] = elem(i);
        acc = ctx.mul(acc, gen_);
    }
    if (acc != 1) raise(errc::internal_check_failed, "generator order mismatch");

    neg_tab_.assign(q_, 0);
    for (elem a = 0; a < q_; ++a) neg_tab_[a] = add_digits(a, 0) == a ? a : a;  // placeholder, fixed below
    for (elem a = 0; a < q_; ++a) {
        // digitwise p-complement
        elem r = 0, mult = 1, x = a;
        while (x) {
            elem d = x % p_;
            r += (d == 0 ? 0 : p_ - d) * mult;
            mult *= p_;
            x /= p_;
        }
        neg_tab_[a] = r;
    }

    if (q_ <= kAddTableLimit) {
        add_tab_.assign(std::size_t(q_) * q_, 0);
        for (elem a = 0; a < q_; ++a)
            for (elem b = 0; b < q_; ++b) add_tab_[std::size_t(a) * q_ + b] = add_digits(a, b);
    }
}

Gf::elem Gf::add_digits(elem a, elem b) const {
    elem r = 0, mult = 1;
    while (a || b) {
        elem s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Gf Gf::prime_field(std::uint32_t p, int m, std::uint64_t size_limit) {
    if (p == 2) raise(errc::char_two, "characteristic 2 is not supported");
    if (!is_prime_u32(p)) raise(errc::non_prime, std::to_string(p) + " is not prime");
    if (m < 1) raise(errc::invalid_argument, "extension degree must be >= 1");
    std::uint64_t q = checked_pow_u64(p, m);
    if (q > size_limit)
        raise(errc::invalid_argument,
              "field size " + std::to_string(q) + " exceeds limit " + std::to_string(size_limit));

    Gf f;
    f.p_ = p;
    f.deg_ = m;
    f.q_ = std::uint32_t(q);
    f.base_q_ = p;
    f.ext_deg_ = m;
    f.modulus_ = find_irreducible(p, m, prime_add, prime_mul, prime_neg, &f.p_);

    PolyCtx ctx(p, m, f.modulus_, prime_add, prime_mul, prime_neg, &f.p_);
    f.build_tables(ctx);
    return f;
}

Gf Gf::extension(const Gf& base, int k, std::uint64_t size_limit) {
    if (k < 1) raise(errc::invalid_argument, "extension degree must be >= 1");
    std::uint64_t q = checked_pow_u64(base.q_, k);
    if (q > size_limit)
        raise(errc::invalid_argument,
              "field size " + std::to_string(q) + " exceeds limit " + std::to_string(size_limit));

    Gf f;
    f.p_ = base.p_;
    f.deg_ = base.deg_ * k;
    f.q_ = std::uint32_t(q);
    f.base_q_ = base.q_;
    f.ext_deg_ = k;
    f.modulus_ = find_irreducible(base.q_, k, field_add, field_mul, field_neg, &base);

    PolyCtx ctx(base.q_, k, f.modulus_, field_add, field_mul, field_neg, &base);
    f.build_tables(ctx);
    return f;
}

Gf::elem Gf::pow(elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[std::size_t(le)];
}

Gf::elem Gf::sqrt(elem a) const {
    if (a == 0) return 0;
    elem l = log_[a];
    if (l & 1) raise(errc::invalid_argument, "square root of a nonsquare");
    return exp_[l / 2];
}

Gf::elem Gf::from_int(long long v) const {
    if (deg_ == 1) {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return elem(r);
    }
    long long a = v < 0 ? -v : v;
    if (a >= (long long)q_) raise(errc::invalid_argument, "residue index out of range");
    return v < 0 ? neg(elem(a)) : elem(a);
}

} // namespace motivecheck
