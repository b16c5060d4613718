#ifndef NUMERO_FINITE_SPACE_HPP
#define NUMERO_FINITE_SPACE_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace numero {

// Explicit finite sample space: an ordered list of distinct labels.
// Label order is fixed at construction and defines bit positions in
// FiniteEvent masks. Capacity is 64 labels (mask width).
class FiniteSpace {
public:
    explicit FiniteSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    // Index of a label; throws ValidationError when unknown.
    std::size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;

    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
    std::vector<std::string> labels_;
};

using FiniteSpacePtr = std::shared_ptr<const FiniteSpace>;

// Subset of a FiniteSpace, stored as a bitmask over label indices.
class FiniteEvent {
public:
    FiniteEvent() = default;

    static FiniteEvent empty(FiniteSpacePtr space);
    static FiniteEvent omega(FiniteSpacePtr space);
    static FiniteEvent of(FiniteSpacePtr space, const std::vector<std::string>& members);
    static FiniteEvent from_mask(FiniteSpacePtr space, std::uint64_t mask);

    const FiniteSpacePtr& space() const { return space_; }
    std::uint64_t mask() const { return mask_; }
    std::size_t cardinality() const;
    bool is_empty() const { return mask_ == 0; }
    bool contains(const std::string& label) const;
    std::vector<std::string> members() const;

    friend FiniteEvent operator|(const FiniteEvent& a, const FiniteEvent& b);
    friend FiniteEvent operator&(const FiniteEvent& a, const FiniteEvent& b);
    friend FiniteEvent operator-(const FiniteEvent& a, const FiniteEvent& b);
    FiniteEvent operator~() const;

    bool is_subset_of(const FiniteEvent& other) const;
    friend bool operator==(const FiniteEvent& a, const FiniteEvent& b);

    void validate() const;

private:
    FiniteEvent(FiniteSpacePtr space, std::uint64_t mask)
        : space_(std::move(space)), mask_(mask) {}

    // Throws ModelMismatchError unless both events live on equal spaces.
    static void require_same_space(const FiniteEvent& a, const FiniteEvent& b);

    FiniteSpacePtr space_;
    std::uint64_t mask_ = 0;
};

std::ostream& operator<<(std::ostream&, const FiniteEvent&);

} // namespace numero

#endif
