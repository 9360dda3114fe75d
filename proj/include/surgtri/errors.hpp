#pragma once

#include <stdexcept>
#include <string>

namespace surgtri {

// Violated mathematical precondition (non-coprime input, parameter out of
// range, non-cycle input).
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A configuration failed a genericity / transversality requirement: a vertex
// on a query line, a curve through the bad point, colliding theta points.
struct genericity_error : precondition_error {
    using precondition_error::precondition_error;
};

// The perturbation width is too coarse for the supplied curve; the query is
// well posed for all smaller eps.
struct instability_error : precondition_error {
    using precondition_error::precondition_error;
};

// Inconsistent internal data (flow cycles with non-zero degree drop,
// differentials that do not square to zero).
struct integrity_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed input file.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace surgtri
