#include "numero/measures.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "numero/errors.hpp"

namespace numero {

MeasureValue::MeasureValue(Rational value) : value_(std::move(value)) {
    if (value_ < 0) throw ValidationError("measure values are non-negative");
}

MeasureValue MeasureValue::infinity() {
    MeasureValue v;
    v.infinite_ = true;
    return v;
}

const Rational& MeasureValue::rational() const {
    if (infinite_) throw DomainError("infinite measure value has no rational form");
    return value_;
}

MeasureValue operator+(const MeasureValue& a, const MeasureValue& b) {
    if (a.infinite_ || b.infinite_) return MeasureValue::infinity();
    return MeasureValue(a.value_ + b.value_);
}

bool operator<(const MeasureValue& a, const MeasureValue& b) {
    if (b.infinite_) return !a.infinite_;
    if (a.infinite_) return false;
    return a.value_ < b.value_;
}

std::string MeasureValue::to_string() const {
    return infinite_ ? "inf" : rational_to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const MeasureValue& v) {
    return os << v.to_string();
}

MeasureValue kolmogorov_measure(const CoinEvent& e) {
    return MeasureValue(make_rational(Integer(e.atoms().size()),
                                      Integer(1) << e.indices().size()));
}

MeasureValue lebesgue_measure(const IntervalEvent& e) { return MeasureValue(e.length()); }

MeasureValue outer_measure(const Event& e) {
    if (const auto* ce = std::get_if<CoinEvent>(&e)) return kolmogorov_measure(*ce);
    if (const auto* ie = std::get_if<IntervalEvent>(&e)) return lebesgue_measure(*ie);
    throw DomainError("finite-model outer measure needs a declared measure space");
}

MeasureValue inner_measure(const NumerosityContext& ctx, const Event& e) {
    ExtendedReal r = nbeta(ctx, e);
    if (!r.is_finite()) return MeasureValue::infinity();
    return MeasureValue(r.rational());
}

CaratheodoryVerdict caratheodory_check(const MeasureOracle& M, const Event& x,
                                       const std::vector<Event>& witnesses) {
    CaratheodoryVerdict v;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const Event& y = witnesses[i];
        MeasureValue whole = M(y);
        MeasureValue split = M(event_intersect(x, y)) + M(event_difference(y, x));
        if (!(whole == split)) {
            v.holds = false;
            v.first_failure = static_cast<std::ptrdiff_t>(i);
            return v;
        }
    }
    return v;
}

namespace {

// Unique exact solution of rows * x = rhs (rows carry the rhs as their last
// column); throws on inconsistency or underdetermination.
std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> rows, std::size_t k) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Rational lead = rows[rank][col];
        for (auto& v : rows[rank]) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c <= k; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][k] != 0) throw ValidationError("mu constraints are inconsistent");
    }
    if (rank < k) throw ValidationError("mu constraints leave some atom undetermined");
    std::vector<Rational> x(k);
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i][k];
    return x;
}

} // namespace

FiniteMeasureSpace FiniteMeasureSpace::build(
    FiniteSpacePtr space, std::vector<FiniteEvent> generators,
    std::vector<std::pair<FiniteEvent, Rational>> mu_constraints) {
    if (!space) throw ValidationError("null finite space");
    FiniteMeasureSpace ms;
    ms.space_ = space;
    const std::size_t n = space->size();

    // Atoms: classes of points lying in exactly the same generators.
    std::map<std::vector<bool>, std::uint64_t> classes;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> sig;
        sig.reserve(generators.size());
        for (const auto& g : generators) {
            if (!(*g.space() == *space)) {
                throw ModelMismatchError("generator from a different finite space");
            }
            sig.push_back((g.mask() >> i) & 1u);
        }
        classes[sig] |= std::uint64_t{1} << i;
    }
    for (const auto& [sig, mask] : classes) ms.atom_masks_.push_back(mask);
    std::sort(ms.atom_masks_.begin(), ms.atom_masks_.end());
    const std::size_t k = ms.atom_masks_.size();
    if (k > 20) throw ValidationError("generated algebra too large to materialize");

    // The generated algebra is exactly the set of unions of atoms.
    ms.algebra_.reserve(std::size_t{1} << k);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((s >> i) & 1u) m |= ms.atom_masks_[i];
        }
        ms.algebra_.push_back(m);
    }
    std::sort(ms.algebra_.begin(), ms.algebra_.end());

    // Solve mu on atoms from the declared constraints.
    std::vector<std::vector<Rational>> rows;
    for (const auto& [set, value] : mu_constraints) {
        if (!(*set.space() == *space)) {
            throw ModelMismatchError("mu constraint from a different finite space");
        }
        if (value < 0) throw ValidationError("mu values are non-negative");
        if (ms.closure_mask(set.mask()) != set.mask()) {
            throw ValidationError("mu constraint set is not in the declared algebra");
        }
        std::vector<Rational> row(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = ((ms.atom_masks_[i] & set.mask()) != 0) ? 1 : 0;
        }
        row[k] = value;
        rows.push_back(std::move(row));
    }
    ms.atom_masses_ = solve_unique(std::move(rows), k);
    for (const Rational& m : ms.atom_masses_) {
        if (m < 0) throw ValidationError("mu constraints force a negative value");
    }

    // Default beta: smallest value making inner <= outer on every subset.
    bool has_null_atom = false;
    Rational best(0);
    for (std::size_t i = 0; i < k; ++i) {
        if (ms.atom_masses_[i] == 0) {
            has_null_atom = true;
        } else {
            Rational ratio =
                Rational(Integer(std::popcount(ms.atom_masks_[i]))) / ms.atom_masses_[i];
            if (ratio > best) best = ratio;
        }
    }
    ms.beta_ = has_null_atom ? NAValue::omega() : NAValue(best);
    return ms;
}

std::uint64_t FiniteMeasureSpace::closure_mask(std::uint64_t mask) const {
    std::uint64_t closed = 0;
    for (std::uint64_t atom : atom_masks_) {
        if (atom & mask) closed |= atom;
    }
    return closed;
}

Rational FiniteMeasureSpace::mu_of_closed_mask(std::uint64_t mask) const {
    Rational total(0);
    for (std::size_t i = 0; i < atom_masks_.size(); ++i) {
        if (atom_masks_[i] & mask) total += atom_masses_[i];
    }
    return total;
}

bool FiniteMeasureSpace::in_algebra(const FiniteEvent& x) const {
    return closure_mask(x.mask()) == x.mask();
}

FiniteEvent FiniteMeasureSpace::algebra_closure(const FiniteEvent& x) const {
    return FiniteEvent::from_mask(space_, closure_mask(x.mask()));
}

MeasureValue FiniteMeasureSpace::mu(const FiniteEvent& x) const {
    if (!in_algebra(x)) throw DomainError("set is not in the declared algebra");
    return MeasureValue(mu_of_closed_mask(x.mask()));
}

MeasureValue FiniteMeasureSpace::outer(const FiniteEvent& x) const {
    return MeasureValue(mu_of_closed_mask(x.mask()));
}

MeasureValue FiniteMeasureSpace::inner(const FiniteEvent& x) const {
    if (x.space() && !(*x.space() == *space_)) {
        throw ModelMismatchError("event from a different finite space");
    }
    if (beta_.classify() == NAValue::Kind::infinite) return MeasureValue(Rational(0));
    return MeasureValue(Rational(Integer(x.cardinality())) / beta_.leading_coefficient());
}

namespace {

struct SpecLineError {
    static ValidationError at(std::size_t line, const std::string& what) {
        std::ostringstream os;
        os << "line " << line << ": " << what;
        return ValidationError(os.str());
    }
};

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

} // namespace

FiniteMeasureSpace parse_finite_spec(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    std::vector<std::string> universe;
    bool have_universe = false;
    std::vector<std::vector<std::string>> gen_sets;
    std::vector<std::pair<std::vector<std::string>, Rational>> constraints;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> words = split_words(raw);
        if (words.empty()) continue;

        std::string head = words.front();
        words.erase(words.begin());
        if (head == "universe:") {
            if (have_universe) throw SpecLineError::at(lineno, "duplicate universe line");
            if (words.empty()) throw SpecLineError::at(lineno, "universe needs labels");
            universe = std::move(words);
            have_universe = true;
        } else if (head == "gen:") {
            if (!have_universe) throw SpecLineError::at(lineno, "gen before universe");
            gen_sets.push_back(std::move(words));
        } else if (head == "mu:") {
            if (!have_universe) throw SpecLineError::at(lineno, "mu before universe");
            auto eq = std::find(words.begin(), words.end(), "=");
            if (eq == words.end() || eq + 1 != words.end() - 1) {
                throw SpecLineError::at(lineno, "expected 'mu: labels... = p/q'");
            }
            auto value = try_parse_rational(words.back());
            if (!value) throw SpecLineError::at(lineno, "malformed rational: " + words.back());
            if (*value < 0) throw SpecLineError::at(lineno, "mu values are non-negative");
            constraints.emplace_back(std::vector<std::string>(words.begin(), eq), *value);
        } else {
            throw SpecLineError::at(lineno, "unrecognized line (expected universe:/gen:/mu:)");
        }
    }
    if (!have_universe) throw ValidationError("finite spec has no universe line");

    auto space = std::make_shared<const FiniteSpace>(universe);
    std::vector<FiniteEvent> generators;
    generators.reserve(gen_sets.size());
    for (const auto& labels : gen_sets) generators.push_back(FiniteEvent::of(space, labels));
    std::vector<std::pair<FiniteEvent, Rational>> mu_constraints;
    mu_constraints.reserve(constraints.size());
    for (const auto& [labels, value] : constraints) {
        mu_constraints.emplace_back(FiniteEvent::of(space, labels), value);
    }
    return FiniteMeasureSpace::build(std::move(space), std::move(generators),
                                     std::move(mu_constraints));
}

namespace {

// Outer-measure numerators after scaling by the atom masses' common
// denominator; int64 when the total fits, arbitrary precision otherwise.
struct ScaledTables {
    std::vector<std::int64_t> small;
    std::vector<Integer> big;
};

ScaledTables build_outer_tables(const FiniteMeasureSpace& ms) {
    const std::size_t n = ms.space()->size();
    Integer denom(1);
    for (const Rational& m : ms.atom_masses()) denom = lcm(denom, denominator(m));
    std::vector<Integer> scaled_mass;
    Integer total(0);
    for (const Rational& m : ms.atom_masses()) {
        scaled_mass.push_back(numerator(m) * (denom / denominator(m)));
        total += scaled_mass.back();
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    ScaledTables t;
    bool fits = total <= Integer(std::numeric_limits<std::int64_t>::max());
    if (fits) {
        t.small.assign(count, 0);
    } else {
        t.big.assign(count, Integer(0));
    }
    const auto& atoms = ms.atom_masks();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (fits) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (atoms[i] & mask) v += static_cast<std::int64_t>(scaled_mass[i]);
            }
            t.small[mask] = v;
        } else {
            Integer v(0);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (atoms[i] & mask) v += scaled_mass[i];
            }
            t.big[mask] = v;
        }
    }
    return t;
}

template <typename I>
std::vector<std::uint64_t> family_from(std::size_t n, const std::vector<I>& out) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> fam;
    for (std::uint64_t x = 0; x <= full; ++x) {
        bool ok = true;
        for (std::uint64_t y = 0; y <= full && ok; ++y) {
            ok = out[y] == out[y & x] + out[y & ~x & full];
        }
        if (ok) fam.push_back(x);
    }
    return fam;
}

struct CoreResult {
    bool outer_regularity = true;
    bool additivity = true;
    bool monotonicity = true;
    bool subadditivity = true;
    bool caratheodory_closed = true;
    std::vector<std::uint64_t> family;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

template <typename I>
CoreResult oracle_core(std::size_t n, const std::vector<I>& out,
                       const std::vector<char>& in_alg,
                       const std::vector<std::uint64_t>& algebra) {
    CoreResult res;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    // Outer measure by definition: min over covering algebra members; must
    // match the closure-based table on every subset (and hence equal mu on
    // members).
    for (std::uint64_t m = 0; m <= full && res.outer_regularity; ++m) {
        bool found = false;
        I best{};
        for (std::uint64_t c : algebra) {
            if ((m & ~c) != 0) continue;
            if (!found || out[c] < best) {
                best = out[c];
                found = true;
            }
        }
        res.outer_regularity = found && best == out[m];
    }

    // Additivity of mu on disjoint algebra pairs.
    for (std::uint64_t a = 0; a <= full && res.additivity; ++a) {
        if (!in_alg[a]) continue;
        std::uint64_t rest = full & ~a;
        for (std::uint64_t b = rest;; b = (b - 1) & rest) {
            if (in_alg[b] && !(out[a | b] == out[a] + out[b])) {
                res.additivity = false;
                break;
            }
            if (b == 0) break;
        }
    }

    // Monotonicity of mu on nested algebra pairs.
    for (std::uint64_t b = 0; b <= full && res.monotonicity; ++b) {
        if (!in_alg[b]) continue;
        for (std::uint64_t a = b;; a = (a - 1) & b) {
            if (in_alg[a] && out[b] < out[a]) {
                res.monotonicity = false;
                break;
            }
            if (a == 0) break;
        }
    }

    // Subadditivity of the outer measure: exhaustive pairs plus seeded
    // random families of up to 10 members (pairs imply all finite families
    // by induction; the families cross-check the aggregation).
    for (std::uint64_t a = 0; a <= full && res.subadditivity; ++a) {
        for (std::uint64_t b = a; b <= full; ++b) {
            if (out[a] + out[b] < out[a | b]) {
                res.subadditivity = false;
                break;
            }
        }
    }
    std::uint64_t rng = 0x243F6A8885A308D3ull;
    for (int fam = 0; fam < 2000 && res.subadditivity; ++fam) {
        std::size_t size = 2 + splitmix64(rng) % 9;
        std::uint64_t united = 0;
        I total{};
        for (std::size_t i = 0; i < size; ++i) {
            std::uint64_t m = splitmix64(rng) & full;
            united |= m;
            total = total + out[m];
        }
        if (total < out[united]) res.subadditivity = false;
    }

    res.family = family_from(n, out);
    std::vector<char> in_fam(full + 1, 0);
    for (std::uint64_t x : res.family) in_fam[x] = 1;
    for (std::uint64_t x : res.family) {
        if (!in_fam[full & ~x]) {
            res.caratheodory_closed = false;
            break;
        }
    }
    for (std::size_t i = 0; i < res.family.size() && res.caratheodory_closed; ++i) {
        for (std::size_t j = i; j < res.family.size(); ++j) {
            if (!in_fam[res.family[i] | res.family[j]]) {
                res.caratheodory_closed = false;
                break;
            }
        }
    }
    return res;
}

} // namespace

std::vector<std::uint64_t> caratheodory_family(const FiniteMeasureSpace& ms) {
    const std::size_t n = ms.space()->size();
    if (n > 14) throw DomainError("exhaustive Caratheodory family needs |universe| <= 14");
    ScaledTables t = build_outer_tables(ms);
    return t.small.empty() ? family_from(n, t.big) : family_from(n, t.small);
}

FiniteOracleReport finite_oracle(const FiniteMeasureSpace& ms, std::size_t bound) {
    const std::size_t n = ms.space()->size();
    if (n > bound) throw DomainError("finite oracle size bound exceeded");
    if (n > 14) throw DomainError("finite oracle supports at most 14 points");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    FiniteOracleReport rep;
    rep.universe_size = n;
    rep.algebra_size = ms.algebra().size();
    rep.beta = ms.beta().to_string();

    std::vector<char> in_alg(full + 1, 0);
    for (std::uint64_t a : ms.algebra()) in_alg[a] = 1;

    ScaledTables t = build_outer_tables(ms);
    CoreResult core = t.small.empty() ? oracle_core(n, t.big, in_alg, ms.algebra())
                                      : oracle_core(n, t.small, in_alg, ms.algebra());
    rep.outer_regularity = core.outer_regularity;
    rep.additivity = core.additivity;
    rep.monotonicity = core.monotonicity;
    rep.sigma_subadditivity = core.subadditivity;
    rep.caratheodory_closed = core.caratheodory_closed;
    rep.caratheodory_size = core.family.size();

    // inner <= outer on every subset; equality on algebra members is
    // informational.
    rep.inner_leq_outer = true;
    rep.equality_on_algebra = true;
    for (std::uint64_t m = 0; m <= full; ++m) {
        FiniteEvent x = FiniteEvent::from_mask(ms.space(), m);
        MeasureValue in = ms.inner(x);
        MeasureValue out = ms.outer(x);
        if (!(in <= out)) rep.inner_leq_outer = false;
        if (in_alg[m] && !(in == out)) rep.equality_on_algebra = false;
    }
    return rep;
}

} // namespace numero
