#ifndef LATMEAS_RATIONAL_HPP
#define LATMEAS_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace latmeas {

// Exact rational value space. All measure arithmetic and every clause check
// is an exact comparison; floating point never enters the pipeline.
using Rat = boost::rational<long long>;

// Parses "p/q" or a plain integer string. Whitespace around the number is
// accepted; a zero denominator is a ParseError.
Rat parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& value);

} // namespace latmeas

#endif
