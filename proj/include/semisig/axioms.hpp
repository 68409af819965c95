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
 * @file axioms.hpp
 *
 * Sample-based semiring law checker. Exhaustively tests all triples drawn
 * from a sample set against the commutative-semiring axioms, plus any
 * capability the instance declares (idempotency, cancellation,
 * zero-divisor freeness). Failures carry a printable counterexample.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "semisig/semiring.hpp"

namespace semisig {

struct axiom_check {
    std::string axiom;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

struct axiom_report {
    std::vector<axiom_check> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const axiom_check* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.axiom == name) return &c;
        return nullptr;
    }
};

namespace detail {

template <typename S>
concept has_cancel_op = requires(const S s, const typename S::value_type& a) {
    { s.cancel(a, a) } -> std::same_as<std::optional<typename S::value_type>>;
};

}  // namespace detail

// A vector, not a span: bool carriers have no contiguous element storage.
template <semiring S>
axiom_report check_axioms(const S& s, const std::vector<value_t<S>>& samples) {
    using V = value_t<S>;
    axiom_report report;

    auto run = [&](std::string name, auto&& body) {
        axiom_check c{std::move(name), true, {}};
        body(c);
        report.checks.push_back(std::move(c));
    };
    auto fail2 = [&](axiom_check& c, const V& a, const V& b) {
        if (!c.passed) return;
        c.passed = false;
        c.counterexample = "a=" + s.to_text(a) + " b=" + s.to_text(b);
    };
    auto fail3 = [&](axiom_check& c, const V& a, const V& b, const V& x) {
        if (!c.passed) return;
        c.passed = false;
        c.counterexample = "a=" + s.to_text(a) + " b=" + s.to_text(b) + " c=" + s.to_text(x);
    };

    run("add-associative", [&](axiom_check& c) {
        for (const V& a : samples)
            for (const V& b : samples)
                for (const V& x : samples)
                    if (!(s.add(s.add(a, b), x) == s.add(a, s.add(b, x)))) fail3(c, a, b, x);
    });
    run("add-commutative", [&](axiom_check& c) {
        for (const V& a : samples)
            for (const V& b : samples)
                if (!(s.add(a, b) == s.add(b, a))) fail2(c, a, b);
    });
    run("add-identity", [&](axiom_check& c) {
        for (const V& a : samples)
            if (!(s.add(a, s.zero()) == a)) fail2(c, a, s.zero());
    });
    run("mul-associative", [&](axiom_check& c) {
        for (const V& a : samples)
            for (const V& b : samples)
                for (const V& x : samples)
                    if (!(s.mul(s.mul(a, b), x) == s.mul(a, s.mul(b, x)))) fail3(c, a, b, x);
    });
    run("mul-commutative", [&](axiom_check& c) {
        for (const V& a : samples)
            for (const V& b : samples)
                if (!(s.mul(a, b) == s.mul(b, a))) fail2(c, a, b);
    });
    run("mul-identity", [&](axiom_check& c) {
        for (const V& a : samples)
            if (!(s.mul(a, s.one()) == a)) fail2(c, a, s.one());
    });
    run("zero-annihilates", [&](axiom_check& c) {
        for (const V& a : samples)
            if (!(s.mul(a, s.zero()) == s.zero())) fail2(c, a, s.zero());
    });
    run("distributive", [&](axiom_check& c) {
        for (const V& a : samples)
            for (const V& b : samples)
                for (const V& x : samples)
                    if (!(s.mul(a, s.add(b, x)) == s.add(s.mul(a, b), s.mul(a, x)))) fail3(c, a, b, x);
    });

    if constexpr (S::is_idempotent) {
        run("add-idempotent", [&](axiom_check& c) {
            for (const V& a : samples)
                if (!(s.add(a, a) == a)) fail2(c, a, a);
        });
    }
    if constexpr (S::is_cancellative) {
        // The property itself: a*c == b*c with c != 0 forces a == b.
        run("cancellation", [&](axiom_check& c) {
            for (const V& a : samples)
                for (const V& b : samples)
                    for (const V& x : samples) {
                        if (x == s.zero() || a == b) continue;
                        if (s.mul(a, x) == s.mul(b, x)) fail3(c, a, b, x);
                    }
        });
        // Round-trip through the cancel op, when one is provided.
        if constexpr (detail::has_cancel_op<S>) {
            run("cancel-roundtrip", [&](axiom_check& c) {
                for (const V& a : samples)
                    for (const V& x : samples) {
                        if (x == s.zero()) continue;
                        auto r = s.cancel(s.mul(a, x), x);
                        if (!r || !(*r == a)) fail2(c, a, x);
                    }
            });
        }
    }
    if constexpr (S::is_zero_divisor_free) {
        run("zero-divisor-free", [&](axiom_check& c) {
            for (const V& a : samples)
                for (const V& b : samples) {
                    if (a == s.zero() || b == s.zero()) continue;
                    if (s.mul(a, b) == s.zero()) fail2(c, a, b);
                }
        });
    }
    return report;
}

}  // namespace semisig
