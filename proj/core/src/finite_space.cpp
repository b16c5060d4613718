#include "numero/finite_space.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "numero/errors.hpp"

namespace numero {

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("finite space needs at least one label");
    if (labels_.size() > 64) throw ValidationError("finite space capacity is 64 labels");
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("duplicate label in finite space");
    }
    for (const auto& l : labels_) {
        if (l.empty()) throw ValidationError("empty label in finite space");
    }
}

std::size_t FiniteSpace::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ValidationError("unknown label: " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteSpace::has_label(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

namespace {

std::uint64_t full_mask(const FiniteSpace& space) {
    return space.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << space.size()) - 1;
}

} // namespace

FiniteEvent FiniteEvent::empty(FiniteSpacePtr space) {
    if (!space) throw ValidationError("null finite space");
    return FiniteEvent(std::move(space), 0);
}

FiniteEvent FiniteEvent::omega(FiniteSpacePtr space) {
    if (!space) throw ValidationError("null finite space");
    std::uint64_t m = full_mask(*space);
    return FiniteEvent(std::move(space), m);
}

FiniteEvent FiniteEvent::of(FiniteSpacePtr space, const std::vector<std::string>& members) {
    if (!space) throw ValidationError("null finite space");
    std::uint64_t m = 0;
    for (const auto& label : members) m |= std::uint64_t{1} << space->index_of(label);
    return FiniteEvent(std::move(space), m);
}

FiniteEvent FiniteEvent::from_mask(FiniteSpacePtr space, std::uint64_t mask) {
    if (!space) throw ValidationError("null finite space");
    if ((mask & ~full_mask(*space)) != 0) throw ValidationError("mask exceeds universe");
    return FiniteEvent(std::move(space), mask);
}

std::size_t FiniteEvent::cardinality() const { return std::popcount(mask_); }

bool FiniteEvent::contains(const std::string& label) const {
    if (!space_) throw ValidationError("event has no space");
    return (mask_ >> space_->index_of(label)) & 1u;
}

std::vector<std::string> FiniteEvent::members() const {
    std::vector<std::string> out;
    if (!space_) return out;
    for (std::size_t i = 0; i < space_->size(); ++i) {
        if ((mask_ >> i) & 1u) out.push_back(space_->label(i));
    }
    return out;
}

void FiniteEvent::require_same_space(const FiniteEvent& a, const FiniteEvent& b) {
    if (!a.space_ || !b.space_) throw ValidationError("event has no space");
    if (a.space_ != b.space_ && !(*a.space_ == *b.space_)) {
        throw ModelMismatchError("events from different finite spaces");
    }
}

FiniteEvent operator|(const FiniteEvent& a, const FiniteEvent& b) {
    FiniteEvent::require_same_space(a, b);
    return FiniteEvent(a.space_, a.mask_ | b.mask_);
}

FiniteEvent operator&(const FiniteEvent& a, const FiniteEvent& b) {
    FiniteEvent::require_same_space(a, b);
    return FiniteEvent(a.space_, a.mask_ & b.mask_);
}

FiniteEvent operator-(const FiniteEvent& a, const FiniteEvent& b) {
    FiniteEvent::require_same_space(a, b);
    return FiniteEvent(a.space_, a.mask_ & ~b.mask_);
}

FiniteEvent FiniteEvent::operator~() const {
    if (!space_) throw ValidationError("event has no space");
    return FiniteEvent(space_, full_mask(*space_) & ~mask_);
}

bool FiniteEvent::is_subset_of(const FiniteEvent& other) const {
    require_same_space(*this, other);
    return (mask_ & ~other.mask_) == 0;
}

bool operator==(const FiniteEvent& a, const FiniteEvent& b) {
    if (!a.space_ || !b.space_) return !a.space_ && !b.space_ && a.mask_ == b.mask_;
    return (a.space_ == b.space_ || *a.space_ == *b.space_) && a.mask_ == b.mask_;
}

void FiniteEvent::validate() const {
    if (!space_) throw ValidationError("event has no space");
    if ((mask_ & ~full_mask(*space_)) != 0) throw ValidationError("mask exceeds universe");
}

std::ostream& operator<<(std::ostream& os, const FiniteEvent& e) {
    os << "{";
    bool first = true;
    for (const auto& label : e.members()) {
        if (!first) os << ", ";
        os << label;
        first = false;
    }
    return os << "}";
}

} // namespace numero
