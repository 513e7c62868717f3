/*
   Copyright 2026 The Liaison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIAISON_RING_HPP
#define LIAISON_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

enum class RingMode { Graded, Affine };

/// Ring context: variable names/degrees, grading mode, coefficient field and
/// the active monomial order. Immutable and shared; all values carry a pointer
/// to their ring.
template <class F>
class Ring {
public:
    static constexpr Exponent kDefaultExponentCap = 64;

    static std::shared_ptr<const Ring> make(F field, std::vector<std::string> names,
                                            RingMode mode = RingMode::Graded,
                                            MonomialOrder order = MonomialOrder::grevlex(),
                                            std::vector<int> degrees = {},
                                            Exponent exponent_cap = kDefaultExponentCap) {
        if (degrees.empty()) degrees.assign(names.size(), 1);
        return std::shared_ptr<const Ring>(new Ring(std::move(field), std::move(names), mode,
                                                    order, std::move(degrees), exponent_cap));
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    RingMode mode() const { return mode_; }
    bool graded() const { return mode_ == RingMode::Graded; }
    const MonomialOrder& order() const { return order_; }
    Exponent exponent_cap() const { return exponent_cap_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    long long degree_of(const Monomial& m) const { return weighted_degree(m, degrees_); }

    int compare(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b, order_, degrees_);
    }

    /// Same variables/degrees/mode/field (order may differ).
    bool same_structure(const Ring& o) const {
        return names_ == o.names_ && degrees_ == o.degrees_ && mode_ == o.mode_ &&
               field_ == o.field_;
    }

    bool compatible(const Ring& o) const {
        return this == &o || (same_structure(o) && order_ == o.order_);
    }

private:
    Ring(F field, std::vector<std::string> names, RingMode mode, MonomialOrder order,
         std::vector<int> degrees, Exponent exponent_cap)
        : field_(std::move(field)),
          names_(std::move(names)),
          degrees_(std::move(degrees)),
          mode_(mode),
          order_(order),
          exponent_cap_(exponent_cap) {
        if (names_.size() != degrees_.size())
            fail(Errc::InvalidArgument, "degree list does not match variable list");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) fail(Errc::InvalidArgument, "empty variable name");
            if (degrees_[i] < 1) fail(Errc::InvalidArgument, "variable degree must be >= 1");
            if (!index_.emplace(names_[i], i).second)
                fail(Errc::InvalidArgument, "duplicate variable name: " + names_[i]);
        }
        if (order_.kind == MonomialOrder::Kind::ElimBlock && order_.block > names_.size())
            fail(Errc::InvalidArgument, "elimination block larger than variable count");
    }

    F field_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    RingMode mode_;
    MonomialOrder order_;
    Exponent exponent_cap_;
    std::unordered_map<std::string, std::size_t> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
inline void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->compatible(*b)) fail(Errc::RingMismatch, "operands from different rings");
}

}  // namespace liaison

#endif
