#include "numero/coin.hpp"

#include <algorithm>
#include <ostream>

namespace numero {

namespace {

void require_symbol(char c) {
    if (c != 'H' && c != 'T') throw ValidationError("coin symbol must be 'H' or 'T'");
}

void sort_unique(std::vector<CoinPoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Re-express atom masks over index set `from` relative to superset `to`.
// Positions of `to` not present in `from` are free and expand to both symbols.
std::vector<uint64_t> lift_atoms(const std::vector<uint32_t>& from,
                                 const std::vector<uint64_t>& atoms,
                                 const std::vector<uint32_t>& to) {
    if (from.size() == to.size()) return atoms;
    std::vector<int> pos_in_from(to.size(), -1);
    std::vector<std::size_t> free_pos;
    for (std::size_t j = 0, i = 0; j < to.size(); ++j) {
        if (i < from.size() && from[i] == to[j]) {
            pos_in_from[j] = static_cast<int>(i++);
        } else {
            free_pos.push_back(j);
        }
    }
    std::vector<uint64_t> lifted;
    lifted.reserve(atoms.size() << free_pos.size());
    for (uint64_t a : atoms) {
        uint64_t placed = 0;
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (pos_in_from[j] >= 0 && ((a >> pos_in_from[j]) & 1)) placed |= uint64_t(1) << j;
        }
        for (uint64_t s = 0; s < (uint64_t(1) << free_pos.size()); ++s) {
            uint64_t m = placed;
            for (std::size_t b = 0; b < free_pos.size(); ++b) {
                if ((s >> b) & 1) m |= uint64_t(1) << free_pos[b];
            }
            lifted.push_back(m);
        }
    }
    std::sort(lifted.begin(), lifted.end());
    return lifted;
}

} // namespace

CoinPoint::CoinPoint(std::string_view prefix, char tail) : prefix_(prefix), tail_(tail) {
    require_symbol(tail_);
    for (char c : prefix_) require_symbol(c);
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

std::string CoinPoint::to_string() const {
    std::string s = prefix_;
    s += '(';
    s += tail_;
    s += ')';
    return s;
}

std::ostream& operator<<(std::ostream& os, const CoinPoint& p) {
    return os << p.to_string();
}

CoinEvent CoinEvent::omega() {
    CoinEvent e;
    e.atoms_.push_back(0);
    return e;
}

CoinEvent CoinEvent::cylinder(std::vector<std::pair<uint32_t, char>> fixes) {
    std::sort(fixes.begin(), fixes.end());
    std::vector<uint32_t> indices;
    uint64_t mask = 0;
    for (std::size_t k = 0; k < fixes.size(); ++k) {
        auto [idx, sym] = fixes[k];
        require_symbol(sym);
        if (idx < 1) throw ValidationError("coin index must be >= 1");
        if (!indices.empty() && indices.back() == idx) {
            throw ValidationError("duplicate index in cylinder");
        }
        indices.push_back(idx);
        if (sym == 'T') mask |= uint64_t(1) << k;
    }
    return make(std::move(indices), {mask}, {}, {});
}

CoinEvent CoinEvent::points(std::vector<CoinPoint> pts) {
    return make({}, {}, std::move(pts), {});
}

CoinEvent CoinEvent::make(std::vector<uint32_t> indices, std::vector<uint64_t> atoms,
                          std::vector<CoinPoint> plus, std::vector<CoinPoint> minus) {
    if (indices.size() > kMaxCoinIndices) throw DomainError("coin index set too large");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1) throw ValidationError("coin index must be >= 1");
        if (i > 0 && indices[i] <= indices[i - 1]) {
            throw ValidationError("indices must be strictly increasing");
        }
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (!atoms.empty() && atoms.back() >= (uint64_t(1) << indices.size())) {
        throw ValidationError("atom mask out of range for index set");
    }

    CoinEvent e;
    e.indices_ = std::move(indices);
    e.atoms_ = std::move(atoms);
    minimize_indices(e.indices_, e.atoms_);

    sort_unique(plus);
    sort_unique(minus);
    for (const CoinPoint& p : plus) {
        if (std::binary_search(minus.begin(), minus.end(), p)) continue; // minus wins
        if (!e.base_contains(p)) e.plus_.push_back(p);
    }
    for (const CoinPoint& p : minus) {
        if (e.base_contains(p)) e.minus_.push_back(p);
    }
    return e;
}

uint64_t CoinEvent::mask_of(const CoinPoint& p) const {
    uint64_t m = 0;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (p.at(indices_[k]) == 'T') m |= uint64_t(1) << k;
    }
    return m;
}

bool CoinEvent::base_contains(const CoinPoint& p) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), mask_of(p));
}

bool CoinEvent::contains(const CoinPoint& p) const {
    if (std::binary_search(plus_.begin(), plus_.end(), p)) return true;
    if (std::binary_search(minus_.begin(), minus_.end(), p)) return false;
    return base_contains(p);
}

uint32_t CoinEvent::max_used_index() const {
    uint32_t m = indices_.empty() ? 0 : indices_.back();
    for (const CoinPoint& p : plus_) m = std::max<uint32_t>(m, p.prefix().size());
    for (const CoinPoint& p : minus_) m = std::max<uint32_t>(m, p.prefix().size());
    return m;
}

void CoinEvent::minimize_indices(std::vector<uint32_t>& indices, std::vector<uint64_t>& atoms) {
    if (atoms.empty()) {
        indices.clear();
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            const uint64_t bit = uint64_t(1) << k;
            bool droppable = true;
            for (uint64_t a : atoms) {
                if (!std::binary_search(atoms.begin(), atoms.end(), a ^ bit)) {
                    droppable = false;
                    break;
                }
            }
            if (!droppable) continue;
            std::vector<uint64_t> projected;
            projected.reserve(atoms.size() / 2);
            for (uint64_t a : atoms) {
                uint64_t low = a & (bit - 1);
                uint64_t high = (a >> (k + 1)) << k;
                projected.push_back(low | high);
            }
            std::sort(projected.begin(), projected.end());
            projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
            atoms = std::move(projected);
            indices.erase(indices.begin() + static_cast<std::ptrdiff_t>(k));
            changed = true;
            break;
        }
    }
}

CoinEvent CoinEvent::boolean_op(const CoinEvent& a, const CoinEvent& b, bool (*op)(bool, bool)) {
    std::vector<uint32_t> joint;
    std::set_union(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
                   std::back_inserter(joint));
    if (joint.size() > kMaxCoinIndices) throw DomainError("coin index set too large");

    std::vector<uint64_t> lifted_a = lift_atoms(a.indices_, a.atoms_, joint);
    std::vector<uint64_t> lifted_b = lift_atoms(b.indices_, b.atoms_, joint);

    std::vector<uint64_t> atoms;
    std::vector<uint64_t> merged;
    std::set_union(lifted_a.begin(), lifted_a.end(), lifted_b.begin(), lifted_b.end(),
                   std::back_inserter(merged));
    for (uint64_t m : merged) {
        bool in_a = std::binary_search(lifted_a.begin(), lifted_a.end(), m);
        bool in_b = std::binary_search(lifted_b.begin(), lifted_b.end(), m);
        if (op(in_a, in_b)) atoms.push_back(m);
    }

    CoinEvent result;
    result.indices_ = std::move(joint);
    result.atoms_ = std::move(atoms);

    // The result can differ from its base only at the operands' exceptional
    // points, so a membership scan over those candidates suffices.
    std::vector<CoinPoint> candidates;
    for (const auto* src : {&a.plus_, &a.minus_, &b.plus_, &b.minus_}) {
        candidates.insert(candidates.end(), src->begin(), src->end());
    }
    sort_unique(candidates);
    std::vector<CoinPoint> plus;
    std::vector<CoinPoint> minus;
    for (const CoinPoint& p : candidates) {
        bool want = op(a.contains(p), b.contains(p));
        bool in_base = result.base_contains(p);
        if (want && !in_base) plus.push_back(p);
        if (!want && in_base) minus.push_back(p);
    }
    minimize_indices(result.indices_, result.atoms_);
    result.plus_ = std::move(plus);
    result.minus_ = std::move(minus);
    return result;
}

CoinEvent operator|(const CoinEvent& a, const CoinEvent& b) {
    return CoinEvent::boolean_op(a, b, +[](bool x, bool y) { return x || y; });
}

CoinEvent operator&(const CoinEvent& a, const CoinEvent& b) {
    return CoinEvent::boolean_op(a, b, +[](bool x, bool y) { return x && y; });
}

CoinEvent operator-(const CoinEvent& a, const CoinEvent& b) {
    return CoinEvent::boolean_op(a, b, +[](bool x, bool y) { return x && !y; });
}

CoinEvent operator~(const CoinEvent& a) {
    CoinEvent result;
    result.indices_ = a.indices_;
    for (uint64_t m = 0; m < (uint64_t(1) << a.indices_.size()); ++m) {
        if (!std::binary_search(a.atoms_.begin(), a.atoms_.end(), m)) result.atoms_.push_back(m);
    }
    std::vector<CoinPoint> candidates;
    candidates.insert(candidates.end(), a.plus_.begin(), a.plus_.end());
    candidates.insert(candidates.end(), a.minus_.begin(), a.minus_.end());
    sort_unique(candidates);
    std::vector<CoinPoint> plus;
    std::vector<CoinPoint> minus;
    for (const CoinPoint& p : candidates) {
        bool want = !a.contains(p);
        bool in_base = result.base_contains(p);
        if (want && !in_base) plus.push_back(p);
        if (!want && in_base) minus.push_back(p);
    }
    CoinEvent::minimize_indices(result.indices_, result.atoms_);
    result.plus_ = std::move(plus);
    result.minus_ = std::move(minus);
    return result;
}

void CoinEvent::validate() const {
    if (indices_.size() > kMaxCoinIndices) throw ValidationError("too many indices");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1) throw ValidationError("index < 1");
        if (i > 0 && indices_[i] <= indices_[i - 1]) throw ValidationError("indices not increasing");
    }
    if (!std::is_sorted(atoms_.begin(), atoms_.end())) throw ValidationError("atoms not sorted");
    if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
        throw ValidationError("duplicate atoms");
    }
    if (!atoms_.empty() && atoms_.back() >= (uint64_t(1) << indices_.size())) {
        throw ValidationError("atom mask out of range");
    }
    if (atoms_.empty() && !indices_.empty()) throw ValidationError("empty base must drop indices");
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        const uint64_t bit = uint64_t(1) << k;
        bool droppable = true;
        for (uint64_t a : atoms_) {
            if (!std::binary_search(atoms_.begin(), atoms_.end(), a ^ bit)) {
                droppable = false;
                break;
            }
        }
        if (droppable) throw ValidationError("index set not minimal");
    }
    for (const auto* pts : {&plus_, &minus_}) {
        if (!std::is_sorted(pts->begin(), pts->end())) throw ValidationError("points not sorted");
        if (std::adjacent_find(pts->begin(), pts->end()) != pts->end()) {
            throw ValidationError("duplicate points");
        }
        for (const CoinPoint& p : *pts) {
            if (!p.prefix().empty() && p.prefix().back() == p.tail()) {
                throw ValidationError("point prefix not canonical");
            }
        }
    }
    for (const CoinPoint& p : plus_) {
        if (base_contains(p)) throw ValidationError("plus point lies in base");
        if (std::binary_search(minus_.begin(), minus_.end(), p)) {
            throw ValidationError("plus and minus overlap");
        }
    }
    for (const CoinPoint& p : minus_) {
        if (!base_contains(p)) throw ValidationError("minus point outside base");
    }
}

std::ostream& operator<<(std::ostream& os, const CoinEvent& e) {
    os << "CoinEvent{I=[";
    for (std::size_t i = 0; i < e.indices().size(); ++i) {
        if (i) os << ",";
        os << e.indices()[i];
    }
    os << "], atoms=" << e.atoms().size() << ", +" << e.plus().size() << ", -" << e.minus().size()
       << "}";
    return os;
}

} // namespace numero
