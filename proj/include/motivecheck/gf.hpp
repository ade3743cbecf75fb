#pragma once

#include <cstdint>
#include <vector>

#include "motivecheck/errors.hpp"

namespace motivecheck {

/// Arithmetic context for a finite field of odd order q = p^m.
///
/// Elements are polynomial residues, indexed lexicographically by their
/// coefficient vector over F_p (constant coefficient least significant), so
/// the element with index i is Sum_j d_j x^j where the d_j are the base-p
/// digits of i. Iterating indices 0..q-1 is the canonical element order.
///
/// A field can be built directly over F_p (prime_field) or on top of an
/// existing field (extension). In the extension case the subfield embeds as
/// the constant polynomials, which under this indexing is the identity map
/// on indices [0, base_q). Multiplication runs on discrete-log tables;
/// addition is digitwise mod p, table-backed for small q.
///
/// Contexts are immutable after construction and safe to share across
/// threads; every operation is a pure function of its inputs.
class Gf {
public:
    using elem = std::uint32_t;

    static constexpr std::uint64_t kDefaultSizeLimit = 10'000'000;

    /// F_{p^m}, p an odd prime. Deterministic modulus search; throws
    /// non_prime / char_two / no_irreducible_found / invalid_argument.
    static Gf prime_field(std::uint32_t p, int m, std::uint64_t size_limit = kDefaultSizeLimit);

    /// Degree-k extension of an existing field (k = 1 reproduces the base).
    static Gf extension(const Gf& base, int k, std::uint64_t size_limit = kDefaultSizeLimit);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return deg_; }

    /// Size of the field this one was constructed over (p for prime towers).
    std::uint32_t base_q() const noexcept { return base_q_; }
    int ext_degree() const noexcept { return ext_deg_; }
    /// Monic modulus over the construction base, coefficient indices,
    /// length ext_degree()+1, leading coefficient 1.
    const std::vector<elem>& modulus() const noexcept { return modulus_; }

    elem zero() const noexcept { return 0; }
    elem one() const noexcept { return 1; }
    elem generator() const noexcept { return gen_; }

    elem add(elem a, elem b) const {
        if (!add_tab_.empty()) return add_tab_[std::size_t(a) * q_ + b];
        if (deg_ == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return elem(s >= q_ ? s - q_ : s);
        }
        return add_digits(a, b);
    }

    elem neg(elem a) const { return neg_tab_[a]; }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[std::size_t(log_[a]) + log_[b]];
    }

    elem sq(elem a) const {
        if (a == 0) return 0;
        return exp_[std::size_t(log_[a]) * 2];
    }

    elem inv(elem a) const {
        if (a == 0) raise(errc::invalid_argument, "inverse of zero");
        return exp_[(q_ - 1) - log_[a]];
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem pow(elem a, std::uint64_t e) const;

    /// Every element of an odd field is a square or not; zero counts as one.
    bool is_square(elem a) const { return a == 0 || (log_[a] & 1u) == 0; }

    /// Canonical square root (even discrete log halved); throws on nonsquares.
    elem sqrt(elem a) const;

    /// Identity embedding of the construction base into this field.
    elem embed_base(elem x) const {
        if (x >= base_q_) raise(errc::invalid_argument, "element outside construction base");
        return x;
    }

    /// Residue parsing: for prime fields any integer reduces mod p; for
    /// extensions |v| must be an element index, with negation applied for
    /// negative input.
    elem from_int(long long v) const;

    std::uint32_t digit(elem a, int j) const {
        for (int t = 0; t < j; ++t) a /= p_;
        return a % p_;
    }

private:
    Gf() = default;

    elem add_digits(elem a, elem b) const;
    void build_tables(const class PolyCtx& ctx);

    std::uint32_t p_ = 0;
    std::uint32_t q_ = 0;
    int deg_ = 0;

    std::uint32_t base_q_ = 0;
    int ext_deg_ = 0;
    std::vector<elem> modulus_;

    elem gen_ = 0;
    std::vector<elem> exp_;  // g^i, i in [0, 2(q-1))
    std::vector<elem> log_;  // log_[0] unused sentinel
    std::vector<elem> neg_tab_;
    std::vector<elem> add_tab_;  // only for q <= kAddTableLimit

    static constexpr std::uint32_t kAddTableLimit = 1024;
};

bool is_prime_u32(std::uint32_t n);

/// Ascending prime factors of n, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (q^dim - 1) / (q - 1), checked against overflow.
std::uint64_t proj_space_size(std::uint64_t q, int dim);

/// q^e with overflow check.
std::uint64_t checked_pow_u64(std::uint64_t q, int e);

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b);

} // namespace motivecheck
