// Copyright 2026 The dqimc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQIMC_COMMON_H
#define DQIMC_COMMON_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dqimc {

/// A nonnegative count that may also be +infinity. Used for girth and for
/// the injectivity radius of the parity map, which are unbounded on forests.
class ExtCount {
   public:
    constexpr explicit ExtCount(std::size_t v) : value_(v) {
    }
    static constexpr ExtCount infinite() {
        ExtCount r(0);
        r.value_.reset();
        return r;
    }

    constexpr bool is_infinite() const {
        return !value_.has_value();
    }
    constexpr bool is_finite() const {
        return value_.has_value();
    }
    /// Throws std::logic_error when infinite.
    std::size_t value() const {
        if (!value_) {
            throw std::logic_error("ExtCount::value() called on an infinite count");
        }
        return *value_;
    }

    std::string str() const {
        return value_ ? std::to_string(*value_) : std::string("inf");
    }

    friend constexpr bool operator==(const ExtCount&, const ExtCount&) = default;

   private:
    std::optional<std::size_t> value_;
};

/// An enumeration budget (assignments, syndromes, matching nodes, ...) would
/// be exceeded. Never a silent truncation.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::string budget, const std::string& what)
        : std::runtime_error(what), budget_(std::move(budget)) {
    }
    const std::string& budget() const {
        return budget_;
    }

   private:
    std::string budget_;
};

/// No object with the requested property exists (e.g. a T-join when a
/// component holds an odd number of T-vertices).
class Infeasible : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Enumeration limits shared across modules.
struct Budgets {
    /// Max log2 of the number of assignments enumerated (2^{n-1}).
    int assignment_log2 = 25;
    /// Max log2 of sum_{k<=l} C(m,k) for the state-vector path.
    int syndrome_log2 = 26;
    /// Max log2 of the state-vector length 2^n.
    int statevector_log2 = 24;
    /// Max |T| for the bitmask matching.
    int max_tset = 22;
    /// Max log2 of the FPT anchor enumeration (2^{|S|}).
    int fpt_log2 = 30;
};

}  // namespace dqimc

#endif
