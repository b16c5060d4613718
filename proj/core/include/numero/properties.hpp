#ifndef NUMERO_PROPERTIES_HPP
#define NUMERO_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "numero/event.hpp"

namespace numero {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    bool passed = false;
    std::string detail; // first failing case, empty when passed
};

// Runs the randomized law suites for one ground model: ordered-field axioms
// on NAValues, Boolean-algebra laws on events, and the numerosity/measure
// properties. Deterministic for a fixed (model, seed, cases).
std::vector<PropertyResult> run_property_suite(Model model, std::uint64_t seed,
                                               std::size_t cases);

bool all_passed(const std::vector<PropertyResult>& results);

} // namespace numero

#endif
