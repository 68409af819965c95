/*
 * Copyright 2026 The semisig Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file semiring.hpp
 *
 * Commutative semirings (S, +, *, 0, 1) as small value types.
 *
 * Every instance exposes the same surface:
 *   - value_type, zero(), one(), add(a,b), mul(a,b)
 *   - static capability flags: is_idempotent, is_cancellative,
 *     is_zero_divisor_free
 *   - id(), to_text(v), from_real(x)
 *   - cancellative instances additionally expose
 *     cancel(p, c) -> optional (the unique a with a*c == p, if any)
 *   - instances whose finite elements form a group under * expose
 *     mul_inverse(v) -> optional
 *
 * Infinities are explicit states of the carrier type (xreal), never IEEE
 * sentinels, so annihilation by the zero element is total and exact and no
 * operation can produce NaN.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semisig {

namespace detail {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/**
 * Extended real: a finite double or one of the two explicit infinities.
 * Total order: -inf < finite values < +inf.
 */
class xreal {
 public:
    constexpr xreal() = default;

    static constexpr xreal of(double v) { return xreal(v, 0); }
    static constexpr xreal plus_infinity() { return xreal(0.0, +1); }
    static constexpr xreal minus_infinity() { return xreal(0.0, -1); }

    constexpr bool is_finite() const { return k_ == 0; }
    constexpr bool is_plus_infinity() const { return k_ > 0; }
    constexpr bool is_minus_infinity() const { return k_ < 0; }

    /// Finite payload; only meaningful when is_finite().
    constexpr double value() const { return v_; }

    friend constexpr bool operator==(const xreal& a, const xreal& b) {
        return a.k_ == b.k_ && (a.k_ != 0 || a.v_ == b.v_);
    }

    friend constexpr bool operator<(const xreal& a, const xreal& b) {
        if (a.k_ != b.k_) return a.k_ < b.k_;
        return a.k_ == 0 && a.v_ < b.v_;
    }

    /// Arithmetic sum with infinity absorption. Opposite infinities never
    /// meet inside a single carrier here; asserted, not handled.
    static constexpr xreal sum(const xreal& a, const xreal& b) {
        if (a.is_finite() && b.is_finite()) return of(a.v_ + b.v_);
        if (!a.is_finite()) {
            assert(b.is_finite() || b.k_ == a.k_);
            return a;
        }
        return b;
    }

    std::string to_text() const {
        if (is_plus_infinity()) return "inf";
        if (is_minus_infinity()) return "-inf";
        return detail::format_double(v_);
    }

 private:
    constexpr xreal(double v, int k) : v_(v), k_(static_cast<std::int8_t>(k)) {}

    double v_ = 0.0;
    std::int8_t k_ = 0;  // -1: -inf, 0: finite, +1: +inf
};

inline xreal min(const xreal& a, const xreal& b) { return b < a ? b : a; }
inline xreal max(const xreal& a, const xreal& b) { return a < b ? b : a; }

/// Commutative semiring interface.
template <typename S>
concept semiring =
    std::copy_constructible<S> &&
    requires(const S s, const typename S::value_type& a,
             const typename S::value_type& b) {
        typename S::value_type;
        { s.zero() } -> std::same_as<typename S::value_type>;
        { s.one() } -> std::same_as<typename S::value_type>;
        { s.add(a, b) } -> std::same_as<typename S::value_type>;
        { s.mul(a, b) } -> std::same_as<typename S::value_type>;
        { s.id() } -> std::convertible_to<std::string>;
        { s.to_text(a) } -> std::convertible_to<std::string>;
        { s.from_real(0.0) } -> std::same_as<typename S::value_type>;
        { a == b } -> std::convertible_to<bool>;
        requires std::convertible_to<decltype(S::is_idempotent), bool>;
        requires std::convertible_to<decltype(S::is_cancellative), bool>;
        requires std::convertible_to<decltype(S::is_zero_divisor_free), bool>;
    };

template <semiring S>
using value_t = typename S::value_type;

/// Instance provides cancel(p, c): the unique a with a*c == p, if any.
template <typename S>
concept cancellative_semiring =
    semiring<S> && S::is_cancellative &&
    requires(const S s, const typename S::value_type& a) {
        { s.cancel(a, a) } -> std::same_as<std::optional<typename S::value_type>>;
    };

/// Instance provides mul_inverse(v) on the finite part of the carrier.
template <typename S>
concept mul_invertible_semiring =
    semiring<S> && requires(const S s, const typename S::value_type& a) {
        { s.mul_inverse(a) } -> std::same_as<std::optional<typename S::value_type>>;
    };

/// (R u {+inf}, min, +, +inf, 0)
struct min_plus {
    using value_type = xreal;
    static constexpr bool is_idempotent = true;
    static constexpr bool is_cancellative = true;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return xreal::plus_infinity(); }
    value_type one() const { return xreal::of(0.0); }
    value_type add(const value_type& a, const value_type& b) const { return min(a, b); }
    value_type mul(const value_type& a, const value_type& b) const {
        if (a == zero() || b == zero()) return zero();
        return xreal::sum(a, b);
    }
    std::optional<value_type> cancel(const value_type& p, const value_type& c) const {
        if (c == zero()) return std::nullopt;
        if (p == zero()) return zero();
        return xreal::of(p.value() - c.value());
    }
    std::optional<value_type> mul_inverse(const value_type& v) const {
        if (!v.is_finite()) return std::nullopt;
        return xreal::of(-v.value());
    }
    std::string id() const { return "min-plus"; }
    std::string to_text(const value_type& v) const { return v.to_text(); }
    value_type from_real(double x) const {
        if (!std::isfinite(x)) throw std::invalid_argument("min-plus: value must be finite");
        return xreal::of(x);
    }
};

/// (R u {-inf}, max, +, -inf, 0)
struct max_plus {
    using value_type = xreal;
    static constexpr bool is_idempotent = true;
    static constexpr bool is_cancellative = true;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return xreal::minus_infinity(); }
    value_type one() const { return xreal::of(0.0); }
    value_type add(const value_type& a, const value_type& b) const { return max(a, b); }
    value_type mul(const value_type& a, const value_type& b) const {
        if (a == zero() || b == zero()) return zero();
        return xreal::sum(a, b);
    }
    std::optional<value_type> cancel(const value_type& p, const value_type& c) const {
        if (c == zero()) return std::nullopt;
        if (p == zero()) return zero();
        return xreal::of(p.value() - c.value());
    }
    std::optional<value_type> mul_inverse(const value_type& v) const {
        if (!v.is_finite()) return std::nullopt;
        return xreal::of(-v.value());
    }
    std::string id() const { return "max-plus"; }
    std::string to_text(const value_type& v) const { return v.to_text(); }
    value_type from_real(double x) const {
        if (!std::isfinite(x)) throw std::invalid_argument("max-plus: value must be finite");
        return xreal::of(x);
    }
};

/// ({false, true}, or, and, false, true)
struct boolean {
    using value_type = bool;
    static constexpr bool is_idempotent = true;
    static constexpr bool is_cancellative = true;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return false; }
    value_type one() const { return true; }
    value_type add(value_type a, value_type b) const { return a || b; }
    value_type mul(value_type a, value_type b) const { return a && b; }
    std::optional<value_type> cancel(value_type p, value_type c) const {
        if (!c) return std::nullopt;
        return p;
    }
    std::string id() const { return "boolean"; }
    std::string to_text(value_type v) const { return v ? "true" : "false"; }
    value_type from_real(double x) const { return x != 0.0; }
};

/// ([0,1], max, *, 0, 1); possibilistic / Viterbi.
struct viterbi {
    using value_type = double;
    static constexpr bool is_idempotent = true;
    // Mathematically cancellative, but a floating cancel (division) would
    // break the exact round-trip contract; not declared.
    static constexpr bool is_cancellative = false;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return 0.0; }
    value_type one() const { return 1.0; }
    value_type add(value_type a, value_type b) const { return a < b ? b : a; }
    value_type mul(value_type a, value_type b) const { return a * b; }
    std::string id() const { return "viterbi"; }
    std::string to_text(value_type v) const { return detail::format_double(v); }
    value_type from_real(double x) const {
        if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("viterbi: value must lie in [0,1]");
        return x;
    }
};

/// (R u {-inf, +inf}, max, min, -inf, +inf)
struct bottleneck {
    using value_type = xreal;
    static constexpr bool is_idempotent = true;
    static constexpr bool is_cancellative = false;  // min(8,7) == min(9,7)
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return xreal::minus_infinity(); }
    value_type one() const { return xreal::plus_infinity(); }
    value_type add(const value_type& a, const value_type& b) const { return max(a, b); }
    value_type mul(const value_type& a, const value_type& b) const { return min(a, b); }
    std::string id() const { return "bottleneck"; }
    std::string to_text(const value_type& v) const { return v.to_text(); }
    value_type from_real(double x) const {
        if (!std::isfinite(x)) throw std::invalid_argument("bottleneck: value must be finite");
        return xreal::of(x);
    }
};

/// (N, +, *, 0, 1) with an unbounded carrier.
struct natural {
    using value_type = boost::multiprecision::cpp_int;
    static constexpr bool is_idempotent = false;
    static constexpr bool is_cancellative = true;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    std::optional<value_type> cancel(const value_type& p, const value_type& c) const {
        if (c == 0) return std::nullopt;
        if (p % c != 0) return std::nullopt;
        return p / c;
    }
    std::string id() const { return "natural"; }
    std::string to_text(const value_type& v) const { return v.str(); }
    value_type from_real(double x) const {
        if (!(x >= 0.0) || x != std::floor(x) || x > 9.0e15)
            throw std::invalid_argument("natural: value must be a non-negative integer");
        return value_type(static_cast<long long>(x));
    }
};

/// (R, +, *, 0, 1); the classical field, for cross-checking.
struct real_field {
    using value_type = double;
    static constexpr bool is_idempotent = false;
    // Cancel would be floating division; inexact, so not declared.
    static constexpr bool is_cancellative = false;
    static constexpr bool is_zero_divisor_free = true;

    value_type zero() const { return 0.0; }
    value_type one() const { return 1.0; }
    value_type add(value_type a, value_type b) const { return a + b; }
    value_type mul(value_type a, value_type b) const { return a * b; }
    std::string id() const { return "real"; }
    std::string to_text(value_type v) const { return detail::format_double(v); }
    value_type from_real(double x) const {
        if (!std::isfinite(x)) throw std::invalid_argument("real: value must be finite");
        return x;
    }
};

/// Mass with a tangent vector of fixed dimension:
///   (a,v) + (a',v') = (a+a', v+v')
///   (a,v) * (a',v') = (a*a', a'v + av')
/// Zero divisors exist: (0,v)*(0,w) = 0 for any v, w.
struct expectation_value {
    double mass = 0.0;
    std::vector<double> grad;
    friend bool operator==(const expectation_value&, const expectation_value&) = default;
};

class expectation {
 public:
    using value_type = expectation_value;
    static constexpr bool is_idempotent = false;
    static constexpr bool is_cancellative = false;
    static constexpr bool is_zero_divisor_free = false;

    explicit expectation(std::size_t dim) : dim_(dim) {
        if (dim_ == 0) throw std::invalid_argument("expectation: dimension must be >= 1");
    }

    std::size_t dimension() const { return dim_; }

    value_type zero() const { return {0.0, std::vector<double>(dim_, 0.0)}; }
    value_type one() const { return {1.0, std::vector<double>(dim_, 0.0)}; }

    value_type add(const value_type& a, const value_type& b) const {
        check(a); check(b);
        value_type r{a.mass + b.mass, a.grad};
        for (std::size_t i = 0; i < dim_; ++i) r.grad[i] += b.grad[i];
        return r;
    }
    value_type mul(const value_type& a, const value_type& b) const {
        check(a); check(b);
        value_type r{a.mass * b.mass, std::vector<double>(dim_)};
        for (std::size_t i = 0; i < dim_; ++i) r.grad[i] = b.mass * a.grad[i] + a.mass * b.grad[i];
        return r;
    }
    std::string id() const { return "expectation:" + std::to_string(dim_); }
    std::string to_text(const value_type& v) const {
        std::string s = detail::format_double(v.mass);
        for (double g : v.grad) s += "|" + detail::format_double(g);
        return s;
    }
    value_type from_real(double x) const {
        if (!(x >= 0.0)) throw std::invalid_argument("expectation: mass must be non-negative");
        return {x, std::vector<double>(dim_, 0.0)};
    }

 private:
    void check(const value_type& v) const {
        if (v.grad.size() != dim_)
            throw std::invalid_argument("expectation: vector dimension mismatch");
    }

    std::size_t dim_;
};

/**
 * n-fold additive iterate of a: a + a + ... + a (n times), n >= 0.
 * Computed by doubling, so idempotent instances get nat_scale(n,a) == a for
 * n >= 1 without a special case.
 */
template <semiring S>
value_t<S> nat_scale(const S& s, std::uint64_t n, const value_t<S>& a) {
    value_t<S> acc = s.zero();
    value_t<S> base = a;
    while (n != 0) {
        if (n & 1u) acc = s.add(acc, base);
        n >>= 1u;
        if (n != 0) base = s.add(base, base);
    }
    return acc;
}

/**
 * Invoke f with the semiring instance named by id.
 * Known ids: min-plus, max-plus, boolean, viterbi, bottleneck, natural,
 * real, expectation:<dim>.
 */
template <typename F>
decltype(auto) dispatch_semiring(std::string_view id, F&& f) {
    if (id == "min-plus") return std::forward<F>(f)(min_plus{});
    if (id == "max-plus") return std::forward<F>(f)(max_plus{});
    if (id == "boolean") return std::forward<F>(f)(boolean{});
    if (id == "viterbi") return std::forward<F>(f)(viterbi{});
    if (id == "bottleneck") return std::forward<F>(f)(bottleneck{});
    if (id == "natural") return std::forward<F>(f)(natural{});
    if (id == "real") return std::forward<F>(f)(real_field{});
    constexpr std::string_view prefix = "expectation:";
    if (id.substr(0, prefix.size()) == prefix) {
        std::string_view rest = id.substr(prefix.size());
        std::size_t dim = 0;
        auto res = std::from_chars(rest.data(), rest.data() + rest.size(), dim);
        if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size() || dim == 0)
            throw std::invalid_argument("bad expectation dimension in semiring id: " + std::string(id));
        return std::forward<F>(f)(expectation{dim});
    }
    throw std::invalid_argument("unknown semiring id: " + std::string(id));
}

}  // namespace semisig
