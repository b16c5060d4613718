#ifndef NUMERO_EVENT_HPP
#define NUMERO_EVENT_HPP

#include <string>
#include <string_view>
#include <variant>

#include "numero/coin.hpp"
#include "numero/finite_space.hpp"
#include "numero/interval.hpp"
#include "numero/rational.hpp"

namespace numero {

enum class Model { coin, interval, finite };

std::string_view model_name(Model m);

// Canonical event of one of the three ground models.
using Event = std::variant<CoinEvent, IntervalEvent, FiniteEvent>;

// Sample point of one of the three ground models: a coin sequence, a real
// (rational) number, or a finite-space label.
using Point = std::variant<CoinPoint, Rational, std::string>;

Model model_of(const Event& e);

// Binary operations require both operands in the same ground model and
// throw ModelMismatchError otherwise.
Event event_union(const Event& a, const Event& b);
Event event_intersect(const Event& a, const Event& b);
Event event_difference(const Event& a, const Event& b);

// Absolute complement; unsupported in the interval model (infinite extent)
// where it throws DomainError.
Event event_complement(const Event& e);

bool event_is_subset(const Event& a, const Event& b);
bool event_is_equal(const Event& a, const Event& b);
bool event_is_empty(const Event& e);

// Membership of a point; the point variant must match the event's model.
bool event_contains(const Event& e, const Point& p);

// Rebuilds the event from its raw parts through the canonicalizing
// constructors; idempotent (returns an equal event for canonical input).
Event event_normalize(const Event& e);

// Throws ValidationError when a canonical-form invariant is violated.
void event_validate(const Event& e);

} // namespace numero

#endif
